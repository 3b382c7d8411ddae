// Copyright 2026 The bianchi-uqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bianchi/fiducial.hpp"

#include <complex>
#include <numbers>
#include <set>

namespace bianchi {
namespace {

// Freely reduced words of length 1..max over generators and inverses, in
// shortlex order.
std::vector<Word> short_words(int generators, int max_length) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (int g = 1; g <= generators; ++g) {
        for (Letter x : {g, -g}) {
          if (!w.empty() && w[w.size() - 1] == -x) continue;
          std::vector<Letter> letters(w.begin(), w.end());
          letters.push_back(x);
          next.emplace_back(std::move(letters));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<FiducialState> fiducials_from_perm_rep(const PermutationRep& r,
                                                   const FiducialOptions& options,
                                                   const std::vector<std::string>& generator_names) {
  const int d = r.degree;
  const auto gens = static_cast<int>(r.images.size());
  const std::vector<std::string> names =
      generator_names.empty() ? default_generator_names(gens) : generator_names;
  std::vector<FiducialState> out;
  std::set<std::vector<int>> seen_perms;
  for (const Word& w : short_words(gens, options.max_word_length)) {
    const std::vector<int> perm = r.evaluate(w);
    if (!seen_perms.insert(perm).second) continue;
    for (const auto& cycle : cycles_of(perm)) {
      const auto len = static_cast<int>(cycle.size());
      if (len < 2) continue;
      for (int j = 0; j < len; ++j) {
        State v = State::Zero(d);
        for (int k = 0; k < len; ++k) {
          v(cycle[static_cast<std::size_t>(k)]) =
              std::polar(1.0 / std::sqrt(static_cast<double>(len)),
                         -2.0 * std::numbers::pi * j * k / len);
        }
        bool duplicate = false;
        for (const FiducialState& f : out) {
          if (std::abs(std::abs(f.amplitudes.dot(v)) - 1.0) < options.tol) {
            duplicate = true;
            break;
          }
        }
        if (duplicate) continue;
        if (options.filter && !non_stabilizer(v, *options.filter, options.tol)) continue;
        out.push_back({v, {options.source, render_word(w, names), cycle, j}});
      }
    }
  }
  return out;
}

}  // namespace bianchi

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

#include "bianchi/presentation.hpp"

#include <algorithm>
#include <cstdlib>

#include "bianchi/errors.hpp"

namespace bianchi {
namespace {

Word checked(const Word& w, int generators, const char* what) {
  for (Letter x : w) {
    if (x == 0 || std::abs(x) > generators) {
      throw InputError(std::string(what) + " uses letter " + std::to_string(x) +
                       " outside [1, " + std::to_string(generators) + "]");
    }
  }
  return free_reduce(w);
}

}  // namespace

GroupPresentation::GroupPresentation(std::vector<std::string> generator_names,
                                     std::vector<Word> relators,
                                     std::vector<PeripheralPair> peripheral,
                                     std::vector<TorsionRep> torsion)
    : names_(std::move(generator_names)) {
  const int g = generator_count();
  for (const Word& r : relators) {
    Word reduced = checked(r, g, "relator");
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
  for (const PeripheralPair& p : peripheral) {
    PeripheralPair q{checked(p.meridian, g, "meridian"),
                     checked(p.longitude, g, "longitude"),
                     {}};
    for (const Word& x : p.extra) q.extra.push_back(checked(x, g, "cusp word"));
    peripheral_.push_back(std::move(q));
  }
  for (const TorsionRep& t : torsion) {
    if (t.order < 2) {
      throw InputError("torsion order must be at least 2, got " +
                       std::to_string(t.order));
    }
    torsion_.push_back({checked(t.word, g, "torsion word"), t.order});
  }
}

GroupPresentation GroupPresentation::with_relator(const Word& r) const {
  std::vector<Word> rels = relators_;
  rels.push_back(r);
  return GroupPresentation(names_, std::move(rels), peripheral_, torsion_);
}

GroupPresentation GroupPresentation::without_cusp(int cusp) const {
  if (cusp < 0 || cusp >= cusp_count()) {
    throw InputError("cusp " + std::to_string(cusp) + " out of range [0, " +
                     std::to_string(cusp_count()) + ")");
  }
  GroupPresentation out = *this;
  out.peripheral_.erase(out.peripheral_.begin() + cusp);
  return out;
}

GroupPresentation GroupPresentation::relabeled(std::span<const int> perm) const {
  const int g = generator_count();
  if (static_cast<int>(perm.size()) != g) {
    throw InputError("relabeling must list every generator once");
  }
  std::vector<int> new_of_old(static_cast<std::size_t>(g), -1);
  for (int i = 0; i < g; ++i) {
    const int old = perm[static_cast<std::size_t>(i)];
    if (old < 0 || old >= g || new_of_old[static_cast<std::size_t>(old)] != -1) {
      throw InputError("relabeling is not a permutation");
    }
    new_of_old[static_cast<std::size_t>(old)] = i;
  }
  auto map = [&](const Word& w) {
    std::vector<Letter> out;
    for (Letter x : w) {
      const int k = new_of_old[static_cast<std::size_t>(std::abs(x) - 1)] + 1;
      out.push_back(x > 0 ? k : -k);
    }
    return Word(std::move(out));
  };
  std::vector<std::string> names(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    names[static_cast<std::size_t>(i)] = names_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
  }
  std::vector<Word> rels;
  for (const Word& r : relators_) rels.push_back(map(r));
  std::vector<PeripheralPair> periph;
  for (const PeripheralPair& p : peripheral_) {
    PeripheralPair q{map(p.meridian), map(p.longitude), {}};
    for (const Word& x : p.extra) q.extra.push_back(map(x));
    periph.push_back(std::move(q));
  }
  std::vector<TorsionRep> tors;
  for (const TorsionRep& t : torsion_) tors.push_back({map(t.word), t.order});
  return GroupPresentation(std::move(names), std::move(rels), std::move(periph),
                           std::move(tors));
}

}  // namespace bianchi

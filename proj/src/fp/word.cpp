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

#include "bianchi/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "bianchi/errors.hpp"

namespace bianchi {

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == -letters_[i - 1]) return false;
  }
  return std::find(letters_.begin(), letters_.end(), 0) == letters_.end();
}

int Word::max_generator() const {
  int m = 0;
  for (Letter x : letters_) m = std::max(m, std::abs(x));
  return m;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return Word(std::move(out));
}

Word inverse(const Word& w) {
  std::vector<Letter> out(w.begin(), w.end());
  std::reverse(out.begin(), out.end());
  for (Letter& x : out) x = -x;
  return Word(std::move(out));
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return free_reduce(Word(std::move(out)));
}

Word power(const Word& w, long n) {
  const Word base = n < 0 ? inverse(w) : w;
  std::vector<Letter> out;
  for (long i = 0; i < std::labs(n); ++i) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return free_reduce(Word(std::move(out)));
}

Word parse_word(std::string_view text, std::span<const std::string> alphabet) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char ch : text) {
    const auto lower = static_cast<char>(
        std::tolower(static_cast<unsigned char>(ch)));
    const auto it = std::find_if(alphabet.begin(), alphabet.end(),
                                 [&](const std::string& name) {
                                   return name.size() == 1 && name[0] == lower;
                                 });
    if (!std::isalpha(static_cast<unsigned char>(ch)) || it == alphabet.end()) {
      throw InputError(std::string("unknown generator letter '") + ch + "'");
    }
    const auto k = static_cast<Letter>(it - alphabet.begin()) + 1;
    out.push_back(std::islower(static_cast<unsigned char>(ch)) ? k : -k);
  }
  return free_reduce(Word(std::move(out)));
}

std::string render_word(const Word& w, std::span<const std::string> names) {
  const bool letters = std::all_of(names.begin(), names.end(),
                                   [](const std::string& n) {
                                     return n.size() == 1 &&
                                            std::islower(static_cast<unsigned char>(n[0]));
                                   });
  std::string out;
  for (Letter x : w) {
    const auto idx = static_cast<std::size_t>(std::abs(x) - 1);
    if (idx >= names.size()) {
      throw InputError("letter " + std::to_string(x) + " outside alphabet");
    }
    if (letters) {
      const char c = names[idx][0];
      out.push_back(x > 0 ? c : static_cast<char>(std::toupper(c)));
    } else {
      if (!out.empty()) out.push_back(' ');
      out += names[idx];
      if (x < 0) out += "^-1";
    }
  }
  return out;
}

std::vector<std::string> default_generator_names(int count) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    names.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i))
                                : "x" + std::to_string(i + 1));
  }
  return names;
}

}  // namespace bianchi

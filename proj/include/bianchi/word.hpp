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
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bianchi {

/// Signed generator index: +k is the k-th generator (1-based), -k its inverse.
using Letter = int;

/// A word in the free group on the generators of a presentation.
///
/// Letters are stored exactly as given; use free_reduce() to obtain the
/// reduced representative. Composition is left to right.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  [[nodiscard]] std::span<const Letter> letters() const { return letters_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }

  [[nodiscard]] bool is_reduced() const;
  /// Largest generator index occurring in the word (0 for the empty word).
  [[nodiscard]] int max_generator() const;

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

[[nodiscard]] Word free_reduce(const Word& w);
[[nodiscard]] Word inverse(const Word& w);
/// Reduced product u*v.
[[nodiscard]] Word operator*(const Word& u, const Word& v);
/// Reduced power w^n; negative n uses the inverse.
[[nodiscard]] Word power(const Word& w, long n);

/// Parses letter syntax: lower-case letter = generator, upper-case = inverse.
/// `alphabet` lists the single-letter generator names in order.
/// Throws InputError naming the offending character.
[[nodiscard]] Word parse_word(std::string_view text,
                              std::span<const std::string> alphabet);

/// Inverse of parse_word for single-letter alphabets. Multi-character
/// generator names render as space-separated tokens with ^-1 for inverses.
[[nodiscard]] std::string render_word(const Word& w,
                                      std::span<const std::string> names);

/// Generator names "a".."z" for up to 26 generators, "x1".."xN" beyond.
[[nodiscard]] std::vector<std::string> default_generator_names(int count);

}  // namespace bianchi

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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bianchi/presentation.hpp"

namespace bianchi {

/// Complete right action of the generators on the cosets of a subgroup.
///
/// Cosets are numbered 0..index-1 with 0 the subgroup itself. Column 2k is
/// generator k+1, column 2k+1 its inverse; entry(c, col) is the coset c·x.
class CosetTable {
 public:
  CosetTable() = default;
  /// Throws InputError unless entries has index * 2 * generators values,
  /// each in [0, index), and every inverse column undoes its generator.
  CosetTable(int generators, int index, std::vector<int> entries,
             std::vector<Word> base_subgroup_words = {});

  [[nodiscard]] int index() const { return index_; }
  [[nodiscard]] int generator_count() const { return generators_; }
  [[nodiscard]] int columns() const { return 2 * generators_; }
  [[nodiscard]] std::span<const int> entries() const { return entries_; }
  [[nodiscard]] const std::vector<Word>& base_subgroup_words() const {
    return base_words_;
  }

  [[nodiscard]] int entry(int coset, int column) const {
    return entries_[static_cast<std::size_t>(coset * columns() + column)];
  }
  [[nodiscard]] int act(int coset, Letter x) const {
    return entry(coset, column_of(x));
  }
  [[nodiscard]] int act(int coset, const Word& w) const;

  [[nodiscard]] static int column_of(Letter x) {
    return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
  }
  [[nodiscard]] static Letter letter_of(int column) {
    return column % 2 == 0 ? column / 2 + 1 : -(column / 2 + 1);
  }

  /// Row-major lexicographic order on the entries (index first).
  friend bool operator<(const CosetTable& a, const CosetTable& b);
  friend bool operator==(const CosetTable& a, const CosetTable& b) {
    return a.generators_ == b.generators_ && a.index_ == b.index_ &&
           a.entries_ == b.entries_;
  }

 private:
  int generators_ = 0;
  int index_ = 0;
  std::vector<int> entries_;
  std::vector<Word> base_words_;
};

/// Generator images of a transitive permutation representation.
struct PermutationRep {
  int degree = 0;
  /// images[k][c] = image of point c under generator k+1.
  std::vector<std::vector<int>> images;

  /// Image permutation of a word (left-to-right composition).
  [[nodiscard]] std::vector<int> evaluate(const Word& w) const;
  friend bool operator==(const PermutationRep&, const PermutationRep&) = default;
};

/// Renumbers cosets by a breadth-first scan from coset 0 in column order.
[[nodiscard]] CosetTable standardize_table(const CosetTable& t);

/// Standardized table obtained by moving the basepoint to \p coset.
[[nodiscard]] CosetTable rebase_table(const CosetTable& t, int coset);

[[nodiscard]] PermutationRep permutation_rep(const CosetTable& t);

/// Every broken coset-table invariant, as readable messages: completeness,
/// relators acting trivially, subgroup words fixing coset 0, transitivity.
[[nodiscard]] std::vector<std::string> table_violations(
    const CosetTable& t, const GroupPresentation& p);

/// Cycle decomposition of a permutation, each cycle starting at its
/// smallest point, cycles ordered by that point.
[[nodiscard]] std::vector<std::vector<int>> cycles_of(std::span<const int> perm);

}  // namespace bianchi

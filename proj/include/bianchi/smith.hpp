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

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "bianchi/abelian_group.hpp"

namespace bianchi {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of exact integers. Rows are relations, columns generators.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}
  /// Throws InputError on ragged input.
  static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows,
                                 int cols = -1);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  BigInt& at(int r, int c) {
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(c)];
  }
  [[nodiscard]] const BigInt& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(c)];
  }
  void append_row(const std::vector<long long>& row);

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> entries_;
};

struct SmithForm {
  /// Nonzero diagonal entries d1 | d2 | ... (units included), all positive.
  std::vector<BigInt> invariant_factors;
  int rank = 0;
  /// Free rank of the cokernel Z^cols / (row lattice).
  int free_rank = 0;
};

[[nodiscard]] SmithForm smith_normal_form(IntegerMatrix m);

/// Cokernel of the matrix as an abelian group. Throws InputError if a
/// torsion coefficient does not fit in 64 bits.
[[nodiscard]] AbelianGroupType cokernel(const IntegerMatrix& m);

}  // namespace bianchi

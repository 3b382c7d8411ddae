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

#include "bianchi/smith.hpp"

#include <limits>
#include <utility>

#include "bianchi/errors.hpp"

namespace bianchi {

IntegerMatrix IntegerMatrix::from_rows(
    const std::vector<std::vector<long long>>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  IntegerMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void IntegerMatrix::append_row(const std::vector<long long>& row) {
  if (static_cast<int>(row.size()) != cols_) {
    throw InputError("matrix row has " + std::to_string(row.size()) +
                     " entries, expected " + std::to_string(cols_));
  }
  for (long long v : row) entries_.emplace_back(v);
  ++rows_;
}

namespace {

void swap_rows(IntegerMatrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntegerMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// Moves the entry of least nonzero absolute value in the lower-right block
// starting at (t, t) to position (t, t). False if the block is zero.
bool place_pivot(IntegerMatrix& m, int t) {
  int best_r = -1;
  int best_c = -1;
  BigInt best;
  for (int r = t; r < m.rows(); ++r) {
    for (int c = t; c < m.cols(); ++c) {
      const BigInt& v = m.at(r, c);
      if (v == 0) continue;
      BigInt a = abs(v);
      if (best_r < 0 || a < best) {
        best = std::move(a);
        best_r = r;
        best_c = c;
        if (best == 1) break;
      }
    }
    if (best_r >= 0 && best == 1) break;
  }
  if (best_r < 0) return false;
  swap_rows(m, t, best_r);
  swap_cols(m, t, best_c);
  return true;
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
  SmithForm out;
  const int limit = std::min(m.rows(), m.cols());
  int t = 0;
  for (; t < limit; ++t) {
    if (!place_pivot(m, t)) break;
    for (;;) {
      bool clean = true;
      const BigInt pivot = m.at(t, t);
      for (int r = t + 1; r < m.rows(); ++r) {
        if (m.at(r, t) == 0) continue;
        const BigInt q = m.at(r, t) / pivot;
        for (int c = t; c < m.cols(); ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < m.cols(); ++c) {
        if (m.at(t, c) == 0) continue;
        const BigInt q = m.at(t, c) / pivot;
        for (int r = t; r < m.rows(); ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) clean = false;
      }
      if (!clean) {
        place_pivot(m, t);
        continue;
      }
      // Row and column are clear; enforce divisibility on the rest.
      int bad_row = -1;
      for (int r = t + 1; r < m.rows() && bad_row < 0; ++r) {
        for (int c = t + 1; c < m.cols(); ++c) {
          if (m.at(r, c) % pivot != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      for (int c = t; c < m.cols(); ++c) m.at(t, c) += m.at(bad_row, c);
    }
    out.invariant_factors.push_back(abs(m.at(t, t)));
  }
  out.rank = static_cast<int>(out.invariant_factors.size());
  out.free_rank = m.cols() - out.rank;
  return out;
}

AbelianGroupType cokernel(const IntegerMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  AbelianGroupType g;
  g.free_rank = s.free_rank;
  for (const BigInt& d : s.invariant_factors) {
    if (d == 1) continue;
    if (d > BigInt(std::numeric_limits<std::uint64_t>::max())) {
      throw InputError("torsion coefficient exceeds 64 bits");
    }
    g.torsion.push_back(static_cast<std::uint64_t>(d));
  }
  return g;
}

}  // namespace bianchi

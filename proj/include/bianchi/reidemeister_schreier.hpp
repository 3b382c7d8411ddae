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

#include <vector>

#include "bianchi/coset_table.hpp"
#include "bianchi/presentation.hpp"
#include "bianchi/subgroup_class.hpp"

namespace bianchi {

/// Schreier transversal and generator numbering for one coset table.
///
/// The transversal is the breadth-first spanning tree from coset 0 in
/// column order. Schreier generators are the positive edges (c, x) off
/// the tree, numbered 1.. in row-major order.
class SchreierSystem {
 public:
  explicit SchreierSystem(const CosetTable& t);

  [[nodiscard]] int generator_count() const { return count_; }
  /// Schreier generator of edge (coset, positive letter x); 0 on the tree.
  [[nodiscard]] int generator_of(int coset, Letter x) const {
    return edge_gen_[static_cast<std::size_t>(coset * generators_ + x - 1)];
  }
  /// Transversal word of a coset (maps coset 0 to it).
  [[nodiscard]] const Word& transversal(int coset) const {
    return transversal_[static_cast<std::size_t>(coset)];
  }
  /// Rewrites w traced from `coset` as a word in the Schreier generators.
  /// Returns the rewritten word and stores the end coset in *end.
  [[nodiscard]] Word rewrite(const Word& w, int coset, int* end = nullptr) const;
  /// Exponent-sum vector of the rewritten word.
  [[nodiscard]] std::vector<long long> rewrite_abelian(const Word& w,
                                                       int coset) const;

 private:
  const CosetTable* table_;
  int generators_;
  int count_ = 0;
  std::vector<int> edge_gen_;
  std::vector<Word> transversal_;
};

/// Full Reidemeister–Schreier presentation of the subgroup: one relator
/// per parent relator and coset. Peripheral pairs are lifted, one per
/// cusp orbit, for parent cusps without extra stabilizer words; the
/// result carries no torsion data.
[[nodiscard]] GroupPresentation subgroup_presentation(const SubgroupClass& s);

}  // namespace bianchi

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
#include <optional>
#include <vector>

#include "bianchi/errors.hpp"
#include "bianchi/subgroup_class.hpp"

namespace bianchi {

/// Resource limits for a search. Unset fields are unlimited.
struct Budget {
  std::optional<double> max_seconds;
  std::optional<std::uint64_t> max_nodes;
};

struct LowIndexOptions {
  int jobs = 1;
  /// Prune branches in which a torsion representative fixes a coset.
  bool torsion_free_only = false;
  Budget budget;
};

struct LowIndexResult {
  /// Sorted by index, then by canonical table.
  std::vector<SubgroupClass> classes;
  /// Every index ≤ complete_through has been searched exhaustively.
  int complete_through = 0;
  std::uint64_t nodes = 0;
};

/// Thrown when the budget runs out; `partial` holds the classes of all
/// indices that finished.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(std::string what, LowIndexResult partial)
      : Error(std::move(what)), partial_(std::move(partial)) {}
  [[nodiscard]] const LowIndexResult& partial() const { return partial_; }

 private:
  LowIndexResult partial_;
};

/// Conjugacy classes of subgroups of index 1..d_max. The index-1 class
/// (the whole group) is included.
[[nodiscard]] LowIndexResult low_index_classes(
    std::shared_ptr<const GroupPresentation> p, int d_max,
    const LowIndexOptions& options = {});

/// Number of classes at each index 2..d_max.
struct SignatureVector {
  std::vector<std::uint64_t> counts;
  friend bool operator==(const SignatureVector&, const SignatureVector&) = default;
};

[[nodiscard]] SignatureVector eta_signature(
    std::shared_ptr<const GroupPresentation> p, int d_max,
    const LowIndexOptions& options = {});

/// Signature from an already computed result, for indices 2..d_max.
[[nodiscard]] SignatureVector eta_from_classes(const LowIndexResult& r,
                                               int d_max);

}  // namespace bianchi

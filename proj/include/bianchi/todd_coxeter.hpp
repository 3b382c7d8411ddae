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
#include <span>

#include "bianchi/coset_table.hpp"
#include "bianchi/presentation.hpp"

namespace bianchi {

/// Outcome of a coset enumeration; \c table is empty on overflow.
struct CosetEnumeration {
  std::optional<CosetTable> table;
  std::size_t cosets_defined = 0;
  std::size_t peak_live = 0;

  [[nodiscard]] bool overflowed() const { return !table.has_value(); }
};

/// Todd–Coxeter enumeration (HLT strategy) of the cosets of the subgroup
/// generated by \p subgroup_gens. Overflows once more than \p max_cosets
/// cosets would be live at the same time. The returned table is
/// standardized, so the result does not depend on the strategy.
[[nodiscard]] CosetEnumeration enumerate_cosets(
    const GroupPresentation& p, std::span<const Word> subgroup_gens,
    std::size_t max_cosets);

/// Order of the group when the enumeration over the trivial subgroup
/// completes within \p max_cosets; std::nullopt means unknown, not infinite.
[[nodiscard]] std::optional<std::uint64_t> group_order(
    const GroupPresentation& p, std::size_t max_cosets);

}  // namespace bianchi

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

#include <memory>
#include <optional>
#include <string_view>

#include "bianchi/abelian_group.hpp"
#include "bianchi/coset_table.hpp"
#include "bianchi/presentation.hpp"

namespace bianchi {

enum class CoveringType { cyclic, regular, irregular };

[[nodiscard]] std::string_view to_string(CoveringType t);

struct SubgroupTags {
  std::optional<bool> torsion_free;
  std::optional<CoveringType> covering_type;
  std::optional<int> cusps;
  std::optional<AbelianGroupType> homology;
};

/// One conjugacy class of finite-index subgroups, represented by its
/// canonical coset table (minimal over all basepoints).
struct SubgroupClass {
  std::shared_ptr<const GroupPresentation> parent;
  CosetTable table;
  SubgroupTags tags;

  [[nodiscard]] int index() const { return table.index(); }
};

/// Smallest standardized table over all choices of basepoint.
[[nodiscard]] CosetTable canonical_table(const CosetTable& t);

/// Every cycle of every torsion representative has length equal to its
/// order. Throws PreconditionError when the parent has no torsion data
/// and is not marked torsion-free (see `parent_is_torsion_free`).
[[nodiscard]] bool is_torsion_free(const SubgroupClass& s,
                                   bool parent_is_torsion_free = false);

[[nodiscard]] CoveringType covering_type(const SubgroupClass& s);

/// Sum over parent cusps of the number of orbits of the cusp subgroup on
/// the cosets. Throws PreconditionError without peripheral data.
[[nodiscard]] int cusp_count(const SubgroupClass& s);

}  // namespace bianchi

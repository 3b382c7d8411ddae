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

#include <string>

#include "bianchi/abelian_group.hpp"
#include "bianchi/presentation.hpp"
#include "bianchi/smith.hpp"
#include "bianchi/subgroup_class.hpp"

namespace bianchi {

/// "1/q" per torsion factor, "1/q^{+s}" when repeated, "1" or "1^{+s}"
/// for the free part, joined by "+", torsion first in ascending order.
/// The trivial group is "0".
[[nodiscard]] std::string format_homology(const AbelianGroupType& h);

/// Inverse of format_homology; throws ParseError.
[[nodiscard]] AbelianGroupType parse_homology(const std::string& text);

/// Relation matrix of the abelianization: one exponent-sum row per relator.
[[nodiscard]] IntegerMatrix abelianized_relations(const GroupPresentation& p);

/// First homology of the whole group.
[[nodiscard]] AbelianGroupType abelianization(const GroupPresentation& p);

/// First homology of the subgroup, via abelianized Reidemeister–Schreier
/// rewriting.
[[nodiscard]] AbelianGroupType subgroup_homology(const SubgroupClass& s);

/// Fills torsion_free (when the parent has torsion data or is marked
/// torsion-free), covering type, cusps (when peripheral data exists) and
/// homology.
void annotate(SubgroupClass& s, bool parent_is_torsion_free);

}  // namespace bianchi

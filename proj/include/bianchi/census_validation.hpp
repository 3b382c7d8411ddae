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
#include <vector>

#include "bianchi/census.hpp"
#include "bianchi/fingerprint.hpp"

namespace bianchi {

struct ValidationReport {
  std::string entry;
  int depth = 0;
  std::vector<FieldComparison> checks;

  [[nodiscard]] bool all_match() const;
};

/// Recomputes η to `depth`, whole-group homology, cusps and (when
/// expected) the group order, and compares them with the entry's
/// expected values. Mismatches are report content. Requires depth ≥ 1.
[[nodiscard]] ValidationReport validate_census_entry(const CensusEntry& e, int depth,
                                                     const FingerprintOptions& options = {});

}  // namespace bianchi

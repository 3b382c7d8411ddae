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

#include <optional>
#include <string>
#include <vector>

#include "bianchi/abelian_group.hpp"
#include "bianchi/census.hpp"
#include "bianchi/low_index.hpp"

namespace bianchi {

struct FingerprintOptions {
  LowIndexOptions search;
  /// Coset limit for the group-order enumeration.
  std::size_t max_cosets = 100000;
};

struct InvariantFingerprint {
  /// Requested η depth; eta.counts covers indices 2..eta_depth.
  int depth = 0;
  /// Largest index whose η term is known (budget watermark).
  int eta_depth = 1;
  SignatureVector eta;
  AbelianGroupType homology;
  int cusps = 0;
  std::optional<std::uint64_t> order;

  friend bool operator==(const InvariantFingerprint&,
                         const InvariantFingerprint&) = default;
};

/// Computes all invariants; a budget overrun truncates η, never throws.
[[nodiscard]] InvariantFingerprint fingerprint(const GroupPresentation& p, int depth,
                                               const FingerprintOptions& options = {});

struct FieldComparison {
  std::string field;
  std::string expected;
  std::string computed;
  bool match = false;
};

struct MatchReport {
  std::string target;
  InvariantFingerprint computed;
  InvariantFingerprint expected;
  std::vector<FieldComparison> fields;
  /// True when η could not be compared to the requested depth.
  bool partial = false;

  /// "consistent" or "inconsistent"; fingerprints never prove isomorphism.
  [[nodiscard]] bool consistent() const;
  [[nodiscard]] std::string verdict() const {
    return consistent() ? "consistent" : "inconsistent";
  }
};

/// Compares two fingerprints field by field. The order is compared only
/// when at least one side knows it.
[[nodiscard]] MatchReport compare_fingerprints(const InvariantFingerprint& computed,
                                               const InvariantFingerprint& expected,
                                               std::string target);

/// Fingerprints `p` and the target's own presentation to `depth` and
/// compares them. Requires depth ≥ 2.
[[nodiscard]] MatchReport invariants_match(const GroupPresentation& p,
                                           const CensusEntry& target, int depth,
                                           const FingerprintOptions& options = {});

[[nodiscard]] std::string format_eta(const SignatureVector& eta);

}  // namespace bianchi

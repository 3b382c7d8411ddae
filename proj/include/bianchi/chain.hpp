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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bianchi/census.hpp"
#include "bianchi/dehn.hpp"
#include "bianchi/fingerprint.hpp"

namespace bianchi {

struct ChainStep {
  std::string from;
  /// Empty means search every cusp.
  std::optional<int> cusp;
  FillingSlope slope;
  std::string to;
};

/// Reads a JSON array of {"from", "cusp": int | "search", "slope": [p, q], "to"}.
[[nodiscard]] std::vector<ChainStep> parse_chain_spec(const nlohmann::json& doc);
[[nodiscard]] std::vector<ChainStep> load_chain_spec(const std::filesystem::path& path);

struct CuspAttempt {
  int cusp = 0;
  MatchReport match;
};

struct ChainStepReport {
  ChainStep step;
  std::vector<CuspAttempt> attempts;
  /// First cusp whose filling is consistent with the target.
  std::optional<int> matched_cusp;

  [[nodiscard]] bool consistent() const { return matched_cusp.has_value(); }
};

struct ChainReport {
  std::vector<ChainStepReport> steps;
  [[nodiscard]] bool consistent() const;
};

/// Fills each step's source entry and matches it against the step target.
/// Throws InputError when a name is not in the census.
[[nodiscard]] ChainReport chain_walk(const Census& census,
                                     const std::vector<ChainStep>& steps, int depth,
                                     const FingerprintOptions& options = {});

}  // namespace bianchi

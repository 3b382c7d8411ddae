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
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bianchi/presentation.hpp"

namespace bianchi {

/// Invariants a census entry is expected to reproduce.
struct ExpectedInvariants {
  /// eta[i] = number of conjugacy classes of index i + 2.
  std::vector<std::uint64_t> eta;
  std::optional<std::string> homology;
  std::optional<int> cusps;
  std::optional<std::string> ideal;
  /// A cusp count quoted by an outside source that disagrees with the
  /// peripheral data; surfaced in validation reports, never enforced.
  std::optional<int> reported_cusps;
  std::optional<std::uint64_t> order;

  friend bool operator==(const ExpectedInvariants&,
                         const ExpectedInvariants&) = default;
};

struct CensusEntry {
  std::string name;
  std::vector<std::string> aliases;
  GroupPresentation presentation;
  std::optional<ExpectedInvariants> expected;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

using Census = std::vector<CensusEntry>;

/// Reads a census file. Throws ParseError (naming entry and field) on a
/// malformed record and ValidationError on duplicate names or a cusp count
/// that disagrees with the peripheral data.
[[nodiscard]] Census load_census(const std::filesystem::path& path);
[[nodiscard]] Census parse_census(const nlohmann::json& doc);
[[nodiscard]] nlohmann::json census_to_json(const Census& census);
[[nodiscard]] nlohmann::json entry_to_json(const CensusEntry& entry);

/// Looks an entry up by name or alias; throws InputError when absent.
[[nodiscard]] const CensusEntry& find_entry(const Census& census,
                                            std::string_view name);

}  // namespace bianchi

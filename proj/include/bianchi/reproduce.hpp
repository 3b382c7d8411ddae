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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bianchi/census.hpp"
#include "bianchi/low_index.hpp"

namespace bianchi {

enum class Verdict { match, mismatch, skipped_budget };
[[nodiscard]] std::string_view to_string(Verdict v);

struct ReproductionRow {
  std::string label;
  nlohmann::json expected;
  nlohmann::json computed;
  Verdict verdict = Verdict::skipped_budget;
  /// Depth and budget actually reached for this row.
  nlohmann::json watermark;
};

struct ReproductionReport {
  /// One of table1, table2, table3, chain, eta.
  std::string target;
  std::vector<ReproductionRow> rows;
  [[nodiscard]] bool any_skipped() const;
  [[nodiscard]] bool all_match() const;
};

struct ReproduceOptions {
  Census census;
  /// Contents of targets.json.
  nlohmann::json targets;
  /// Directory holding the chain files named in targets.json.
  std::filesystem::path data_dir;
  LowIndexOptions search;
  std::size_t max_cosets = 1000000;
  /// Rows above this index are skipped.
  int max_index = 12;
  bool stretch = false;
  /// eta target only: restrict to one group and override the depth.
  std::optional<std::string> group;
  std::optional<int> depth;
};

[[nodiscard]] ReproductionReport reproduce(std::string_view target,
                                           const ReproduceOptions& options);
[[nodiscard]] nlohmann::json to_json(const ReproductionReport& r);

/// Classes of `source` at `index` whose covering type, homology and cusp
/// count equal the given ones. Classes come back annotated.
[[nodiscard]] std::vector<SubgroupClass> find_covers(const GroupPresentation& source,
                                                     int index, std::string_view type,
                                                     std::string_view homology, int cusps,
                                                     const LowIndexOptions& search = {});

}  // namespace bianchi

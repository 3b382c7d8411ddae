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

#include <nlohmann/json.hpp>

#include "bianchi/census_validation.hpp"
#include "bianchi/chain.hpp"
#include "bianchi/fingerprint.hpp"
#include "bianchi/subgroup_class.hpp"

namespace bianchi {

/// Class summary; `id` is its position in the listing that produced it.
[[nodiscard]] nlohmann::json class_to_json(const SubgroupClass& s, int id);
[[nodiscard]] nlohmann::json to_json(const AbelianGroupType& h);
[[nodiscard]] nlohmann::json to_json(const InvariantFingerprint& f);
[[nodiscard]] nlohmann::json to_json(const MatchReport& r);
[[nodiscard]] nlohmann::json to_json(const ChainReport& r);
[[nodiscard]] nlohmann::json to_json(const ValidationReport& r);
[[nodiscard]] nlohmann::json presentation_to_json(const GroupPresentation& p);

/// Aligned plain-text rendering of a report document.
[[nodiscard]] std::string render_text(const nlohmann::json& doc);

}  // namespace bianchi

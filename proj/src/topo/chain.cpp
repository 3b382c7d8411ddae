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

#include "bianchi/chain.hpp"

#include <algorithm>
#include <fstream>

#include "bianchi/errors.hpp"

namespace bianchi {

std::vector<ChainStep> parse_chain_spec(const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("chain spec must be a JSON array");
  std::vector<ChainStep> steps;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& s = doc[i];
    const std::string where = "chain step " + std::to_string(i);
    try {
      ChainStep step;
      step.from = s.at("from").get<std::string>();
      step.to = s.at("to").get<std::string>();
      const auto& cusp = s.at("cusp");
      if (cusp.is_string()) {
        if (cusp.get<std::string>() != "search") {
          throw ParseError(where + ": cusp must be an integer or \"search\"");
        }
      } else {
        step.cusp = cusp.get<int>();
      }
      const auto& slope = s.at("slope");
      if (!slope.is_array() || slope.size() != 2) {
        throw ParseError(where + ": slope must be [p, q]");
      }
      step.slope = FillingSlope::make(slope[0].get<int>(), slope[1].get<int>());
      steps.push_back(std::move(step));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(where + ": " + e.what());
    } catch (const InputError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return steps;
}

std::vector<ChainStep> load_chain_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open chain spec " + path.string());
  try {
    return parse_chain_spec(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

bool ChainReport::consistent() const {
  return !steps.empty() && std::all_of(steps.begin(), steps.end(),
                                       [](const ChainStepReport& s) { return s.consistent(); });
}

ChainReport chain_walk(const Census& census, const std::vector<ChainStep>& steps,
                       int depth, const FingerprintOptions& options) {
  for (const ChainStep& s : steps) {
    (void)find_entry(census, s.from);
    (void)find_entry(census, s.to);
  }
  ChainReport report;
  for (const ChainStep& s : steps) {
    const CensusEntry& from = find_entry(census, s.from);
    const CensusEntry& to = find_entry(census, s.to);
    const InvariantFingerprint target = fingerprint(to.presentation, depth, options);
    ChainStepReport sr;
    sr.step = s;
    std::vector<int> cusps;
    if (s.cusp) {
      cusps.push_back(*s.cusp);
    } else {
      for (int c = 0; c < from.presentation.cusp_count(); ++c) cusps.push_back(c);
    }
    for (int c : cusps) {
      const GroupPresentation filled = dehn_fill(from, c, s.slope);
      MatchReport m = compare_fingerprints(fingerprint(filled, depth, options), target, to.name);
      if (!sr.matched_cusp && m.consistent()) sr.matched_cusp = c;
      sr.attempts.push_back({c, std::move(m)});
    }
    report.steps.push_back(std::move(sr));
  }
  return report;
}

}  // namespace bianchi

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
#include <random>
#include <string>

#include "bianchi/census.hpp"

namespace fixtures {

inline const bianchi::Census& census() {
  static const bianchi::Census c = bianchi::load_census(BIANCHI_TEST_CENSUS);
  return c;
}

inline std::shared_ptr<const bianchi::GroupPresentation> group(const std::string& name) {
  return std::make_shared<const bianchi::GroupPresentation>(
      bianchi::find_entry(census(), name).presentation);
}

inline const bianchi::GroupPresentation& find_entry_presentation(const std::string& name) {
  return bianchi::find_entry(census(), name).presentation;
}

inline bianchi::GroupPresentation make(std::vector<std::string> names,
                                       const std::vector<std::string>& relators) {
  std::vector<bianchi::Word> rels;
  for (const auto& r : relators) rels.push_back(bianchi::parse_word(r, names));
  return bianchi::GroupPresentation(std::move(names), std::move(rels));
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20260417u);
  return gen;
}

}  // namespace fixtures

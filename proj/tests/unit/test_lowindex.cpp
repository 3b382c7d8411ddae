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

#include <doctest.h>

#include "bianchi/errors.hpp"
#include "bianchi/low_index.hpp"
#include "bianchi/subgroup_class.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bianchi;

TEST_CASE("eta agrees with transitive-tuple enumeration") {
  std::vector<std::shared_ptr<const GroupPresentation>> groups;
  for (const auto& e : fixtures::census()) {
    if (e.presentation.generator_count() <= 3) {
      groups.push_back(std::make_shared<const GroupPresentation>(e.presentation));
    }
  }
  groups.push_back(std::make_shared<const GroupPresentation>(fixtures::make({"a", "b"}, {})));
  groups.push_back(std::make_shared<const GroupPresentation>(
      fixtures::make({"a", "b"}, {"aa", "bbb", "ababababab"})));
  for (const auto& p : groups) {
    CHECK(eta_signature(p, 3).counts == oracle::transitive_tuple_eta(*p, 3));
  }
}

TEST_CASE("free group of rank two") {
  const auto p = std::make_shared<const GroupPresentation>(fixtures::make({"a", "b"}, {}));
  CHECK(eta_signature(p, 4).counts == std::vector<std::uint64_t>{3, 7, 26});
}

TEST_CASE("classes are canonical and independent of worker count") {
  const auto p = fixtures::group("L6a2");
  LowIndexOptions one;
  LowIndexOptions many;
  many.jobs = 4;
  const LowIndexResult a = low_index_classes(p, 5, one);
  const LowIndexResult b = low_index_classes(p, 5, many);
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].table == b.classes[i].table);
    CHECK(canonical_table(a.classes[i].table) == a.classes[i].table);
  }
  CHECK(a.complete_through == 5);
  CHECK(a.classes.front().index() == 1);
}

TEST_CASE("index-two classes are cyclic covers") {
  for (const char* name : {"L6a5", "L6a2", "Bianchi-7"}) {
    const LowIndexResult r = low_index_classes(fixtures::group(name), 2);
    for (const auto& s : r.classes) {
      if (s.index() == 2) CHECK(covering_type(s) == CoveringType::cyclic);
    }
  }
}

TEST_CASE("node budget raises with a partial result") {
  LowIndexOptions o;
  o.budget.max_nodes = 50;
  try {
    (void)low_index_classes(fixtures::group("L8n7"), 4, o);
    FAIL("expected the budget to run out");
  } catch (const BudgetExhausted& e) {
    CHECK(e.partial().complete_through < 4);
    for (const auto& s : e.partial().classes) CHECK(s.index() <= 4);
  }
}

TEST_CASE("torsion pruning keeps exactly the torsion-free classes") {
  const auto p = fixtures::group("Bianchi-7");
  LowIndexOptions pruned;
  pruned.torsion_free_only = true;
  const LowIndexResult all = low_index_classes(p, 6);
  const LowIndexResult tf = low_index_classes(p, 6, pruned);
  std::vector<CosetTable> expected;
  for (const auto& s : all.classes) {
    if (s.index() == 6 && is_torsion_free(s)) expected.push_back(s.table);
  }
  std::vector<CosetTable> got;
  for (const auto& s : tf.classes) {
    if (s.index() == 6) got.push_back(s.table);
  }
  CHECK(got == expected);
  CHECK(got.size() == 10);
}

TEST_CASE("torsion test needs torsion data") {
  const LowIndexResult r = low_index_classes(fixtures::group("L6a5"), 2);
  CHECK_THROWS_AS((void)is_torsion_free(r.classes.back()), PreconditionError);
  CHECK(is_torsion_free(r.classes.back(), true));
}

TEST_CASE("cusp counts of covers") {
  // A d-fold cyclic cover of the figure-eight knot complement keeps one cusp.
  const LowIndexResult r = low_index_classes(fixtures::group("K4a1"), 5);
  for (const auto& s : r.classes) {
    if (covering_type(s) == CoveringType::cyclic) CHECK(cusp_count(s) == 1);
  }
  // The magic manifold's index-1 class sees its three cusps.
  CHECK(cusp_count(low_index_classes(fixtures::group("L6a5"), 1).classes.front()) == 3);
}

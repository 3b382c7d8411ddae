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

#include "bianchi/census_validation.hpp"
#include "bianchi/chain.hpp"
#include "bianchi/dehn.hpp"
#include "bianchi/errors.hpp"
#include "bianchi/fingerprint.hpp"
#include "bianchi/homology.hpp"
#include "bianchi/todd_coxeter.hpp"
#include "fixtures.hpp"

using namespace bianchi;

TEST_CASE("slopes must be primitive") {
  CHECK_THROWS_AS((void)FillingSlope::make(2, 4), InputError);
  CHECK_THROWS_AS((void)FillingSlope::make(0, 0), InputError);
  CHECK(FillingSlope::make(-1, 1) == FillingSlope{-1, 1});
}

TEST_CASE("filling along the meridian of a knot gives the trivial group") {
  const CensusEntry& k = find_entry(fixtures::census(), "K4a1");
  const GroupPresentation s3 = dehn_fill(k, 0, FillingSlope::make(1, 0));
  CHECK(s3.cusp_count() == 0);
  CHECK(group_order(s3, 1000) == std::optional<std::uint64_t>(1));
}

TEST_CASE("(p,q) and (-p,-q) fill the same manifold") {
  for (const char* name : {"L6a5", "L5a1", "K4a1"}) {
    const CensusEntry& e = find_entry(fixtures::census(), name);
    for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {-1, 1}, {2, 1}, {1, 3}}) {
      const GroupPresentation a = dehn_fill(e, 0, FillingSlope::make(p, q));
      const GroupPresentation b = dehn_fill(e, 0, FillingSlope::make(-p, -q));
      CHECK(abelianization(a) == abelianization(b));
      CHECK(fingerprint(a, 3).eta == fingerprint(b, 3).eta);
    }
  }
}

TEST_CASE("homology of a filled knot is Z/p") {
  const CensusEntry& k = find_entry(fixtures::census(), "K4a1");
  CHECK(format_homology(abelianization(dehn_fill(k, 0, FillingSlope::make(5, 1)))) == "1/5");
  CHECK(format_homology(abelianization(dehn_fill(k, 0, FillingSlope::make(0, 1)))) == "1");
}

TEST_CASE("cusp index is checked") {
  const CensusEntry& k = find_entry(fixtures::census(), "K4a1");
  CHECK_THROWS_AS((void)dehn_fill(k, 1, FillingSlope::make(1, 1)), InputError);
}

TEST_CASE("fingerprints compare field by field") {
  const GroupPresentation& l = fixtures::find_entry_presentation("L6a5");
  const InvariantFingerprint f = fingerprint(l, 3);
  CHECK(f.eta.counts == std::vector<std::uint64_t>{7, 17});
  CHECK(f.cusps == 3);
  CHECK_FALSE(f.order.has_value());
  const MatchReport same = compare_fingerprints(f, f, "L6a5");
  CHECK(same.verdict() == "consistent");
  InvariantFingerprint other = f;
  other.cusps = 2;
  CHECK(compare_fingerprints(f, other, "x").verdict() == "inconsistent");
  CHECK_THROWS_AS((void)invariants_match(l, find_entry(fixtures::census(), "L6a5"), 1), InputError);
}

TEST_CASE("exhausted budgets give partial fingerprints") {
  FingerprintOptions o;
  o.search.budget.max_nodes = 20;
  const InvariantFingerprint f = fingerprint(fixtures::find_entry_presentation("L8n7"), 4, o);
  CHECK(f.eta_depth < 4);
  const MatchReport m = compare_fingerprints(f, fingerprint(fixtures::find_entry_presentation("L8n7"), 4), "L8n7");
  CHECK(m.partial);
}

TEST_CASE("one chain step with cusp search") {
  const auto steps = parse_chain_spec(nlohmann::json::parse(
      R"([{"from": "L6a5", "cusp": "search", "slope": [1, 1], "to": "L5a1"}])"));
  REQUIRE(steps.size() == 1);
  CHECK_FALSE(steps[0].cusp.has_value());
  const ChainReport r = chain_walk(fixtures::census(), steps, 3);
  CHECK(r.consistent());
  CHECK(r.steps[0].attempts.size() == 3);
  CHECK_THROWS_AS((void)parse_chain_spec(nlohmann::json::parse(R"([{"from": "L6a5"}])")),
                  ParseError);
}

TEST_CASE("census validation reports the K4a1 cusp discrepancy") {
  const ValidationReport r = validate_census_entry(find_entry(fixtures::census(), "K4a1"), 3);
  bool flagged = false;
  for (const auto& c : r.checks) {
    if (c.field == "reported_cusps") flagged = !c.match;
    if (c.field == "cusps") CHECK(c.match);
  }
  CHECK(flagged);
  CHECK(validate_census_entry(find_entry(fixtures::census(), "L6a5"), 3).all_match());
}

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

#include <algorithm>
#include <numeric>

#include "bianchi/coset_table.hpp"
#include "bianchi/errors.hpp"
#include "bianchi/todd_coxeter.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bianchi;

namespace {

std::vector<oracle::Perm> generator_perms(const CosetTable& t) {
  const PermutationRep rep = permutation_rep(t);
  return {rep.images.begin(), rep.images.end()};
}

CosetTable renumbered(const CosetTable& t, const std::vector<int>& relabel) {
  const int n = t.index();
  std::vector<int> entries(static_cast<std::size_t>(n * t.columns()));
  for (int c = 0; c < n; ++c) {
    for (int col = 0; col < t.columns(); ++col) {
      entries[static_cast<std::size_t>(relabel[static_cast<std::size_t>(c)] * t.columns() + col)] =
          relabel[static_cast<std::size_t>(t.entry(c, col))];
    }
  }
  return CosetTable(t.generator_count(), n, std::move(entries));
}

}  // namespace

TEST_CASE("cyclic group of order five") {
  const GroupPresentation p = fixtures::make({"a"}, {"aaaaa"});
  const CosetEnumeration e = enumerate_cosets(p, {}, 100);
  REQUIRE_FALSE(e.overflowed());
  CHECK(e.table->index() == 5);
  CHECK(table_violations(*e.table, p).empty());
}

TEST_CASE("infinite groups overflow the coset limit") {
  const GroupPresentation p = fixtures::make({"a", "b"}, {"abAB"});
  CHECK(enumerate_cosets(p, {}, 1000).overflowed());
  CHECK_FALSE(group_order(p, 1000).has_value());
}

TEST_CASE("group order agrees with permutation closure") {
  struct Case {
    GroupPresentation p;
    std::uint64_t order;
  };
  const std::vector<Case> cases{
      {fixtures::make({"a", "b"}, {"aa", "bbb", "abab"}), 6},
      {fixtures::make({"a", "b"}, {"aa", "bbb", "ababababab"}), 60},
      {fixtures::make({"a", "b"}, {"aaaa", "aaBB", "abaB"}), 8},
      {fixtures::find_entry_presentation("PoincareSphere"), 120},
  };
  for (const auto& c : cases) {
    const auto order = group_order(c.p, 100000);
    REQUIRE(order.has_value());
    CHECK(*order == c.order);
    const CosetEnumeration e = enumerate_cosets(c.p, {}, 100000);
    REQUIRE_FALSE(e.overflowed());
    // The regular representation is faithful, so its closure has |G| elements.
    CHECK(oracle::closure_order(generator_perms(*e.table)) == c.order);
    const auto gens = generator_perms(*e.table);
    for (const Word& r : c.p.relators()) {
      CHECK(oracle::image(gens, r, e.table->index()) == oracle::identity(e.table->index()));
    }
  }
}

TEST_CASE("standardization is independent of coset numbering") {
  const GroupPresentation p = fixtures::make({"a", "b"}, {"aa", "bbb", "ababababab"});
  const Word b{2};
  const CosetEnumeration e = enumerate_cosets(p, std::vector<Word>{b}, 1000);
  REQUIRE_FALSE(e.overflowed());
  const CosetTable base = standardize_table(*e.table);
  CHECK(base.index() == 20);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> relabel(static_cast<std::size_t>(base.index()));
    std::iota(relabel.begin(), relabel.end(), 0);
    // Coset 0 stays the basepoint.
    std::shuffle(relabel.begin() + 1, relabel.end(), fixtures::rng());
    CHECK(standardize_table(renumbered(base, relabel)) == base);
  }
}

TEST_CASE("coset tables reject inconsistent inverse columns") {
  CHECK_THROWS_AS(CosetTable(1, 2, {1, 1, 0, 1}), InputError);
}

TEST_CASE("subgroup of index two in a dihedral group") {
  const GroupPresentation p = fixtures::make({"a", "b"}, {"aaaa", "bb", "abab"});
  const CosetEnumeration e = enumerate_cosets(p, std::vector<Word>{Word{1}}, 100);
  REQUIRE_FALSE(e.overflowed());
  CHECK(e.table->index() == 2);
}

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

#include "bianchi/subgroup_class.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bianchi/errors.hpp"

namespace bianchi {
namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

std::string_view to_string(CoveringType t) {
  switch (t) {
    case CoveringType::cyclic: return "cyc";
    case CoveringType::regular: return "reg";
    case CoveringType::irregular: return "irr";
  }
  return "irr";
}

CosetTable canonical_table(const CosetTable& t) {
  CosetTable best = standardize_table(t);
  for (int b = 1; b < t.index(); ++b) {
    CosetTable candidate = rebase_table(t, b);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

bool is_torsion_free(const SubgroupClass& s, bool parent_is_torsion_free) {
  if (!s.parent) throw PreconditionError("subgroup class has no parent");
  const auto& torsion = s.parent->torsion();
  if (torsion.empty()) {
    if (parent_is_torsion_free) return true;
    throw PreconditionError("parent presentation carries no torsion data");
  }
  const PermutationRep rep = permutation_rep(s.table);
  for (const TorsionRep& t : torsion) {
    const std::vector<int> perm = rep.evaluate(t.word);
    for (const auto& cycle : cycles_of(perm)) {
      if (static_cast<int>(cycle.size()) != t.order) return false;
    }
  }
  return true;
}

CoveringType covering_type(const SubgroupClass& s) {
  const CosetTable& t = s.table;
  const int n = t.index();
  const CosetTable base = standardize_table(t);
  for (int b = 1; b < n; ++b) {
    if (!(rebase_table(t, b) == base)) return CoveringType::irregular;
  }
  // Regular: the image group acts simply transitively, so it has n
  // elements and is cyclic iff one of them is an n-cycle.
  const PermutationRep rep = permutation_rep(t);
  std::set<std::vector<int>> group;
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> pending{identity};
  group.insert(identity);
  while (!pending.empty()) {
    const std::vector<int> g = std::move(pending.back());
    pending.pop_back();
    for (const auto& gen : rep.images) {
      std::vector<int> h(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) {
        h[static_cast<std::size_t>(c)] =
            gen[static_cast<std::size_t>(g[static_cast<std::size_t>(c)])];
      }
      if (group.insert(h).second) pending.push_back(std::move(h));
    }
  }
  for (const auto& g : group) {
    if (cycles_of(g).size() == 1) return CoveringType::cyclic;
  }
  return CoveringType::regular;
}

int cusp_count(const SubgroupClass& s) {
  if (!s.parent || s.parent->peripheral().empty()) {
    throw PreconditionError("cusp counting needs peripheral words");
  }
  const PermutationRep rep = permutation_rep(s.table);
  const int n = s.table.index();
  int total = 0;
  for (const PeripheralPair& cusp : s.parent->peripheral()) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<const Word*> words{&cusp.meridian, &cusp.longitude};
    for (const Word& w : cusp.extra) words.push_back(&w);
    for (const Word* w : words) {
      const std::vector<int> perm = rep.evaluate(*w);
      for (int c = 0; c < n; ++c) {
        const int a = find_root(parent, c);
        const int b = find_root(parent, perm[static_cast<std::size_t>(c)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int c = 0; c < n; ++c) {
      if (find_root(parent, c) == c) ++total;
    }
  }
  return total;
}

}  // namespace bianchi

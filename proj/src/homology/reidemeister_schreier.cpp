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

#include "bianchi/reidemeister_schreier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bianchi/errors.hpp"

namespace bianchi {

SchreierSystem::SchreierSystem(const CosetTable& t)
    : table_(&t), generators_(t.generator_count()) {
  const int n = t.index();
  edge_gen_.assign(static_cast<std::size_t>(n * generators_), -1);
  transversal_.assign(static_cast<std::size_t>(n), Word{});
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int c = queue[i];
    for (int col = 0; col < t.columns(); ++col) {
      const int d = t.entry(c, col);
      if (seen[static_cast<std::size_t>(d)]) continue;
      seen[static_cast<std::size_t>(d)] = true;
      queue.push_back(d);
      const Letter x = CosetTable::letter_of(col);
      transversal_[static_cast<std::size_t>(d)] =
          transversal_[static_cast<std::size_t>(c)] * Word{x};
      // Tree edges get generator 0.
      if (x > 0) {
        edge_gen_[static_cast<std::size_t>(c * generators_ + x - 1)] = 0;
      } else {
        edge_gen_[static_cast<std::size_t>(d * generators_ - x - 1)] = 0;
      }
    }
  }
  for (auto& g : edge_gen_) {
    if (g < 0) g = ++count_;
  }
  const int expected = n * (generators_ - 1) + 1;
  if (count_ != expected) {
    throw std::logic_error("Schreier generator count " + std::to_string(count_) +
                           " differs from index*(g-1)+1 = " +
                           std::to_string(expected));
  }
}

Word SchreierSystem::rewrite(const Word& w, int coset, int* end) const {
  std::vector<Letter> out;
  int e = coset;
  for (Letter y : w) {
    if (y > 0) {
      const int g = generator_of(e, y);
      if (g != 0) out.push_back(g);
      e = table_->act(e, y);
    } else {
      e = table_->act(e, y);
      const int g = generator_of(e, -y);
      if (g != 0) out.push_back(-g);
    }
  }
  if (end != nullptr) *end = e;
  return free_reduce(Word(std::move(out)));
}

std::vector<long long> SchreierSystem::rewrite_abelian(const Word& w,
                                                       int coset) const {
  std::vector<long long> row(static_cast<std::size_t>(count_), 0);
  int e = coset;
  for (Letter y : w) {
    if (y > 0) {
      const int g = generator_of(e, y);
      if (g != 0) ++row[static_cast<std::size_t>(g - 1)];
      e = table_->act(e, y);
    } else {
      e = table_->act(e, y);
      const int g = generator_of(e, -y);
      if (g != 0) --row[static_cast<std::size_t>(g - 1)];
    }
  }
  return row;
}

namespace {

// Smallest i ≥ 1 with perm^i(c) = c, 0 if none within `limit`.
int first_return(const std::vector<int>& perm, int c, int limit) {
  int x = c;
  for (int i = 1; i <= limit; ++i) {
    x = perm[static_cast<std::size_t>(x)];
    if (x == c) return i;
  }
  return 0;
}

}  // namespace

GroupPresentation subgroup_presentation(const SubgroupClass& s) {
  if (!s.parent) throw PreconditionError("subgroup class has no parent");
  const GroupPresentation& p = *s.parent;
  const CosetTable& t = s.table;
  const SchreierSystem rs(t);
  const int n = t.index();

  std::vector<Word> relators;
  for (const Word& r : p.relators()) {
    for (int c = 0; c < n; ++c) {
      Word w = rs.rewrite(r, c);
      if (!w.empty() && std::find(relators.begin(), relators.end(), w) == relators.end()) {
        relators.push_back(std::move(w));
      }
    }
  }

  std::vector<PeripheralPair> peripheral;
  const PermutationRep rep = permutation_rep(t);
  for (const PeripheralPair& cusp : p.peripheral()) {
    if (!cusp.extra.empty()) continue;
    const std::vector<int> m = rep.evaluate(cusp.meridian);
    const std::vector<int> l = rep.evaluate(cusp.longitude);
    std::vector<int> orbit_of(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < n; ++c) {
      if (orbit_of[static_cast<std::size_t>(c)] >= 0) continue;
      // Flood the <m, l> orbit of c.
      std::vector<int> stack{c};
      orbit_of[static_cast<std::size_t>(c)] = c;
      while (!stack.empty()) {
        const int e = stack.back();
        stack.pop_back();
        for (const auto* perm : {&m, &l}) {
          const int f = (*perm)[static_cast<std::size_t>(e)];
          if (orbit_of[static_cast<std::size_t>(f)] < 0) {
            orbit_of[static_cast<std::size_t>(f)] = c;
            stack.push_back(f);
          }
        }
      }
      // Stabilizer lattice of c in <m, l> = Z^2: basis (i0, 0), (-s, j).
      const int i0 = first_return(m, c, n);
      std::vector<int> m_orbit;
      int x = c;
      for (int i = 0; i < i0; ++i) {
        m_orbit.push_back(x);
        x = m[static_cast<std::size_t>(x)];
      }
      int j = 0;
      int shift = 0;
      x = c;
      for (int k = 1; k <= n; ++k) {
        x = l[static_cast<std::size_t>(x)];
        const auto it = std::find(m_orbit.begin(), m_orbit.end(), x);
        if (it != m_orbit.end()) {
          j = k;
          shift = static_cast<int>(it - m_orbit.begin());
          break;
        }
      }
      const Word& tau = rs.transversal(c);
      const Word tau_inv = inverse(tau);
      const Word mer = tau * power(cusp.meridian, i0) * tau_inv;
      const Word lon = tau * power(cusp.longitude, j) *
                       power(cusp.meridian, -shift) * tau_inv;
      peripheral.push_back({rs.rewrite(mer, 0), rs.rewrite(lon, 0), {}});
    }
  }
  return GroupPresentation(default_generator_names(rs.generator_count()),
                           std::move(relators), std::move(peripheral));
}

}  // namespace bianchi

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

// Brute-force reference implementations. None of them calls into the
// library beyond reading presentations.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "bianchi/presentation.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

inline Perm invert(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return out;
}

inline Perm identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm image(const std::vector<Perm>& gens, const bianchi::Word& w, int n) {
  Perm p = identity(n);
  for (int x : w) {
    const Perm& g = gens[static_cast<std::size_t>(std::abs(x) - 1)];
    p = compose(p, x > 0 ? g : invert(g));
  }
  return p;
}

inline bool transitive(const std::vector<Perm>& gens, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    const int c = q.front();
    q.pop();
    for (const Perm& g : gens) {
      for (int y : {g[static_cast<std::size_t>(c)], invert(g)[static_cast<std::size_t>(c)]}) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          ++count;
          q.push(y);
        }
      }
    }
  }
  return count == n;
}

// Number of transitive actions on d points up to relabeling, i.e. conjugacy
// classes of index-d subgroups, for d = 2..d_max.
inline std::vector<std::uint64_t> transitive_tuple_eta(const bianchi::GroupPresentation& p,
                                                       int d_max) {
  std::vector<std::uint64_t> eta;
  const int k = p.generator_count();
  for (int d = 2; d <= d_max; ++d) {
    std::vector<Perm> sym;
    Perm s = identity(d);
    do sym.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));

    std::set<std::vector<Perm>> classes;
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<Perm> gens;
      for (std::size_t i : pick) gens.push_back(sym[i]);
      bool ok = transitive(gens, d);
      for (const auto& r : p.relators()) {
        if (!ok) break;
        ok = image(gens, r, d) == identity(d);
      }
      if (ok) {
        std::vector<Perm> best;
        for (const Perm& sigma : sym) {
          std::vector<Perm> conj;
          for (const Perm& g : gens) conj.push_back(compose(compose(invert(sigma), g), sigma));
          if (best.empty() || conj < best) best = conj;
        }
        classes.insert(best);
      }
      std::size_t pos = 0;
      while (pos < pick.size() && ++pick[pos] == sym.size()) pick[pos++] = 0;
      if (pos == pick.size()) break;
    }
    eta.push_back(classes.size());
  }
  return eta;
}

// Order of the group generated by permutations, by closure.
inline std::size_t closure_order(const std::vector<Perm>& gens) {
  if (gens.empty()) return 1;
  const int n = static_cast<int>(gens.front().size());
  std::set<Perm> seen{identity(n)};
  std::queue<Perm> q;
  q.push(identity(n));
  while (!q.empty()) {
    const Perm p = q.front();
    q.pop();
    for (const Perm& g : gens) {
      Perm next = compose(p, g);
      if (seen.insert(next).second) q.push(std::move(next));
    }
  }
  return seen.size();
}

using Matrix = std::vector<std::vector<long long>>;

inline long long det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(std::move(row));
    }
    sum += (c % 2 == 0 ? 1 : -1) * m[0][c] * det(minor);
  }
  return sum;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

struct CokernelType {
  int free_rank = 0;
  std::vector<long long> torsion;  // factors > 1, ascending
};

// Cokernel of the row lattice via determinantal divisors: d_k is the gcd of
// all k x k minors and the invariant factors are d_k / d_{k-1}.
inline CokernelType determinantal_cokernel(const Matrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<long long> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs;
    std::vector<std::vector<std::size_t>> cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        Matrix sub;
        for (std::size_t i : r) {
          std::vector<long long> row;
          for (std::size_t j : c) row.push_back(m[i][j]);
          sub.push_back(std::move(row));
        }
        g = std::gcd(g, std::llabs(det(sub)));
      }
    }
    if (g == 0) break;
    divisors.push_back(g);
  }
  CokernelType out;
  const std::size_t rank = divisors.size() - 1;
  out.free_rank = static_cast<int>(cols - rank);
  for (std::size_t k = 1; k < divisors.size(); ++k) {
    const long long f = divisors[k] / divisors[k - 1];
    if (f > 1) out.torsion.push_back(f);
  }
  return out;
}

}  // namespace oracle

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

#include "bianchi/coset_table.hpp"

#include <algorithm>
#include <deque>

#include "bianchi/errors.hpp"

namespace bianchi {

CosetTable::CosetTable(int generators, int index, std::vector<int> entries,
                       std::vector<Word> base_subgroup_words)
    : generators_(generators),
      index_(index),
      entries_(std::move(entries)),
      base_words_(std::move(base_subgroup_words)) {
  if (generators < 0 || index < 1 ||
      entries_.size() != static_cast<std::size_t>(index) * 2 *
                             static_cast<std::size_t>(generators)) {
    throw InputError("coset table dimensions do not match its entries");
  }
  for (int c = 0; c < index_; ++c) {
    for (int col = 0; col < columns(); ++col) {
      const int d = entry(c, col);
      if (d < 0 || d >= index_) throw InputError("coset table is not complete");
      if (entry(d, col ^ 1) != c) {
        throw InputError("coset table inverse columns are inconsistent");
      }
    }
  }
}

int CosetTable::act(int coset, const Word& w) const {
  for (Letter x : w) coset = act(coset, x);
  return coset;
}

bool operator<(const CosetTable& a, const CosetTable& b) {
  if (a.index_ != b.index_) return a.index_ < b.index_;
  return a.entries_ < b.entries_;
}

std::vector<int> PermutationRep::evaluate(const Word& w) const {
  std::vector<int> out(static_cast<std::size_t>(degree));
  for (int c = 0; c < degree; ++c) {
    int x = c;
    for (Letter l : w) {
      const auto& img = images[static_cast<std::size_t>(std::abs(l) - 1)];
      if (l > 0) {
        x = img[static_cast<std::size_t>(x)];
      } else {
        x = static_cast<int>(std::find(img.begin(), img.end(), x) - img.begin());
      }
    }
    out[static_cast<std::size_t>(c)] = x;
  }
  return out;
}

CosetTable rebase_table(const CosetTable& t, int start) {
  const int n = t.index();
  const int cols = t.columns();
  std::vector<int> new_of_old(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  new_of_old[static_cast<std::size_t>(start)] = 0;
  order.push_back(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int col = 0; col < cols; ++col) {
      const int d = t.entry(order[i], col);
      if (new_of_old[static_cast<std::size_t>(d)] < 0) {
        new_of_old[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw InputError("coset table is not transitive");
  }
  std::vector<int> entries(static_cast<std::size_t>(n * cols));
  for (int c = 0; c < n; ++c) {
    for (int col = 0; col < cols; ++col) {
      entries[static_cast<std::size_t>(c * cols + col)] =
          new_of_old[static_cast<std::size_t>(t.entry(order[static_cast<std::size_t>(c)], col))];
    }
  }
  return CosetTable(t.generator_count(), n, std::move(entries),
                    start == 0 ? t.base_subgroup_words() : std::vector<Word>{});
}

CosetTable standardize_table(const CosetTable& t) { return rebase_table(t, 0); }

PermutationRep permutation_rep(const CosetTable& t) {
  PermutationRep r;
  r.degree = t.index();
  for (int k = 0; k < t.generator_count(); ++k) {
    std::vector<int> img(static_cast<std::size_t>(t.index()));
    for (int c = 0; c < t.index(); ++c) img[static_cast<std::size_t>(c)] = t.entry(c, 2 * k);
    r.images.push_back(std::move(img));
  }
  return r;
}

std::vector<std::string> table_violations(const CosetTable& t,
                                          const GroupPresentation& p) {
  std::vector<std::string> out;
  if (t.generator_count() != p.generator_count()) {
    out.push_back("generator count differs from the presentation");
    return out;
  }
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    for (int c = 0; c < t.index(); ++c) {
      if (t.act(c, p.relators()[r]) != c) {
        out.push_back("relator " + std::to_string(r) + " moves coset " + std::to_string(c));
        break;
      }
    }
  }
  for (std::size_t i = 0; i < t.base_subgroup_words().size(); ++i) {
    if (t.act(0, t.base_subgroup_words()[i]) != 0) {
      out.push_back("subgroup generator " + std::to_string(i) + " does not fix coset 0");
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(t.index()), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (int col = 0; col < t.columns(); ++col) {
      const int d = t.entry(c, col);
      if (!seen[static_cast<std::size_t>(d)]) {
        seen[static_cast<std::size_t>(d)] = true;
        ++reached;
        queue.push_back(d);
      }
    }
  }
  if (reached != t.index()) out.push_back("action is not transitive");
  return out;
}

std::vector<std::vector<int>> cycles_of(std::span<const int> perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cycle;
    for (auto c = s; !seen[c]; c = static_cast<std::size_t>(perm[c])) {
      seen[c] = true;
      cycle.push_back(static_cast<int>(c));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace bianchi

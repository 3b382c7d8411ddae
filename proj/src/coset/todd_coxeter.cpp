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

#include "bianchi/todd_coxeter.hpp"

#include <algorithm>

namespace bianchi {
namespace {

constexpr int kUndefined = -1;

// HLT coset enumeration over a growable table. Dead cosets keep their rows
// until the next compaction so that coincidence processing can read them.
class Enumerator {
 public:
  Enumerator(const GroupPresentation& p, std::size_t max_live)
      : cols_(2 * p.generator_count()), max_live_(max_live) {
    for (const Word& r : p.relators()) relators_.push_back(columns(r));
    add_coset();
  }

  std::optional<CosetTable> run(std::span<const Word> subgroup_gens,
                                int generators) {
    for (const Word& w : subgroup_gens) {
      scan_and_fill(0, columns(free_reduce(w)));
      if (overflow_) return std::nullopt;
    }
    for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
      if (!alive(alpha)) continue;
      for (const auto& r : relators_) {
        scan_and_fill(static_cast<int>(alpha), r);
        if (overflow_) return std::nullopt;
        if (!alive(alpha)) break;
      }
      if (!alive(alpha)) continue;
      for (int x = 0; x < cols_; ++x) {
        if (at(static_cast<int>(alpha), x) == kUndefined) {
          define(static_cast<int>(alpha), x);
          if (overflow_) return std::nullopt;
        }
      }
      if (parent_.size() > 4096 && parent_.size() > 2 * live_) {
        alpha = compact(alpha);
      }
    }
    compact(0);
    std::vector<int> entries(table_.begin(), table_.end());
    std::vector<Word> base(subgroup_gens.begin(), subgroup_gens.end());
    for (Word& w : base) w = free_reduce(w);
    return standardize_table(CosetTable(generators, static_cast<int>(live_),
                                        std::move(entries), std::move(base)));
  }

  std::size_t defined() const { return defined_; }
  std::size_t peak() const { return peak_; }

 private:
  std::vector<int> columns(const Word& w) const {
    std::vector<int> out;
    out.reserve(w.size());
    for (Letter x : w) out.push_back(CosetTable::column_of(x));
    return out;
  }

  int& at(int c, int x) { return table_[static_cast<std::size_t>(c * cols_ + x)]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  void add_coset() {
    const auto c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), kUndefined);
    ++live_;
    ++defined_;
    peak_ = std::max(peak_, live_);
  }

  void define(int c, int x) {
    if (live_ >= max_live_) {
      overflow_ = true;
      return;
    }
    const auto d = static_cast<int>(parent_.size());
    add_coset();
    at(c, x) = d;
    at(d, x ^ 1) = c;
  }

  int rep(int c) {
    int root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) {
      root = parent_[static_cast<std::size_t>(root)];
    }
    while (parent_[static_cast<std::size_t>(c)] != root) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  void merge(int a, int b) {
    const int ra = rep(a);
    const int rb = rep(b);
    if (ra == rb) return;
    const int lo = std::min(ra, rb);
    const int hi = std::max(ra, rb);
    parent_[static_cast<std::size_t>(hi)] = lo;
    queue_.push_back(hi);
    --live_;
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const int gamma = queue_[i];
      for (int x = 0; x < cols_; ++x) {
        const int delta = at(gamma, x);
        if (delta == kUndefined) continue;
        at(delta, x ^ 1) = kUndefined;
        const int mu = rep(gamma);
        const int nu = rep(delta);
        if (at(mu, x) != kUndefined) {
          merge(nu, at(mu, x));
        } else if (at(nu, x ^ 1) != kUndefined) {
          merge(mu, at(nu, x ^ 1));
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) != kUndefined) {
        f = at(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) != kUndefined) {
        b = at(b, w[static_cast<std::size_t>(j)] ^ 1);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[static_cast<std::size_t>(i)]) = b;
        at(b, w[static_cast<std::size_t>(i)] ^ 1) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
      if (overflow_) return;
    }
  }

  // Drops dead rows; returns the new position of coset `keep`.
  std::size_t compact(std::size_t keep) {
    std::vector<int> new_index(parent_.size(), kUndefined);
    int next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (alive(c)) new_index[c] = next++;
    }
    std::vector<int> table(static_cast<std::size_t>(next * cols_), kUndefined);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        const int d = at(static_cast<int>(c), x);
        table[static_cast<std::size_t>(new_index[c] * cols_ + x)] =
            d == kUndefined ? kUndefined : new_index[static_cast<std::size_t>(d)];
      }
    }
    // `keep` is alive whenever it is used as a resume point; rewinding
    // to the nearest earlier live coset is harmless otherwise.
    std::size_t resumed = 0;
    for (std::size_t c = 0; c <= keep && c < parent_.size(); ++c) {
      if (alive(c)) resumed = static_cast<std::size_t>(new_index[c]);
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    for (int c = 0; c < next; ++c) parent_[static_cast<std::size_t>(c)] = c;
    return resumed;
  }

  int cols_;
  std::size_t max_live_;
  std::vector<std::vector<int>> relators_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<int> queue_;
  std::size_t live_ = 0;
  std::size_t defined_ = 0;
  std::size_t peak_ = 0;
  bool overflow_ = false;
};

}  // namespace

CosetEnumeration enumerate_cosets(const GroupPresentation& p,
                                  std::span<const Word> subgroup_gens,
                                  std::size_t max_cosets) {
  CosetEnumeration out;
  if (max_cosets == 0) return out;
  Enumerator e(p, max_cosets);
  out.table = e.run(subgroup_gens, p.generator_count());
  out.cosets_defined = e.defined();
  out.peak_live = e.peak();
  return out;
}

std::optional<std::uint64_t> group_order(const GroupPresentation& p,
                                         std::size_t max_cosets) {
  const auto result = enumerate_cosets(p, {}, max_cosets);
  if (result.overflowed()) return std::nullopt;
  return static_cast<std::uint64_t>(result.table->index());
}

}  // namespace bianchi

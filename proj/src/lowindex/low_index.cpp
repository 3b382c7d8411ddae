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

#include "bianchi/low_index.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace bianchi {
namespace {

constexpr int kUndefined = -1;
using Clock = std::chrono::steady_clock;

struct Limits {
  explicit Limits(const Budget& b) : max_nodes(b.max_nodes) {
    if (b.max_seconds) {
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(*b.max_seconds));
    }
  }
  std::optional<std::uint64_t> max_nodes;
  std::optional<Clock::time_point> deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};

  // Counts one node; false once any limit is reached.
  bool tick() {
    if (stop.load(std::memory_order_relaxed)) return false;
    const auto n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (max_nodes && n > *max_nodes) {
      stop = true;
      return false;
    }
    if (deadline && (n & 1023U) == 0 && Clock::now() > *deadline) {
      stop = true;
      return false;
    }
    return true;
  }
};

// Relators with all cyclic conjugates of themselves and their inverses,
// bucketed by first column.
std::vector<std::vector<std::vector<int>>> relator_rotations(
    const GroupPresentation& p) {
  std::vector<std::vector<std::vector<int>>> by_column(
      static_cast<std::size_t>(2 * p.generator_count()));
  for (const Word& r : p.relators()) {
    for (const Word& w : {r, inverse(r)}) {
      std::vector<int> cols;
      for (Letter x : w) cols.push_back(CosetTable::column_of(x));
      for (std::size_t s = 0; s < cols.size(); ++s) {
        std::vector<int> rot(cols.begin() + static_cast<std::ptrdiff_t>(s), cols.end());
        rot.insert(rot.end(), cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(s));
        auto& bucket = by_column[static_cast<std::size_t>(rot.front())];
        if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) {
          bucket.push_back(std::move(rot));
        }
      }
    }
  }
  return by_column;
}

struct Snapshot {
  std::vector<int> table;
  int cosets = 1;
};

// Backtracking over partial coset tables of a fixed target index. Cosets are
// created only at the first undefined entry in row-major order, so every
// partial table is already standardized.
class Search {
 public:
  Search(const GroupPresentation& p,
         const std::vector<std::vector<std::vector<int>>>& rotations,
         int index, bool torsion_free_only, Limits& limits)
      : cols_(2 * p.generator_count()),
        index_(index),
        rotations_(rotations),
        limits_(limits),
        table_(static_cast<std::size_t>(index * cols_), kUndefined) {
    if (torsion_free_only) {
      for (const TorsionRep& t : p.torsion()) {
        std::vector<int> cols;
        for (Letter x : t.word) cols.push_back(CosetTable::column_of(x));
        torsion_.emplace_back(std::move(cols), t.order);
      }
    }
  }

  void load(const Snapshot& s) {
    table_ = s.table;
    cosets_ = s.cosets;
    trail_.clear();
  }
  Snapshot snapshot() const { return {table_, cosets_}; }

  // Depth-first search from the loaded state. Children at `frontier_depth`
  // are collected instead of explored when `frontier` is non-null.
  void run(std::vector<std::vector<int>>& found, int frontier_depth = -1,
           std::vector<Snapshot>* frontier = nullptr) {
    explore(found, 0, frontier_depth, frontier);
  }

  bool stopped() const { return limits_.stop.load(std::memory_order_relaxed); }

 private:
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c * cols_ + x)]; }

  void set(int c, int x, int d) {
    at(c, x) = d;
    at(d, x ^ 1) = c;
    trail_.push_back(c * cols_ + x);
    trail_.push_back(d * cols_ + (x ^ 1));
    queue_.emplace_back(c, x);
  }

  void undo(std::size_t mark, int cosets) {
    while (trail_.size() > mark) {
      table_[static_cast<std::size_t>(trail_.back())] = kUndefined;
      trail_.pop_back();
    }
    cosets_ = cosets;
  }

  bool deduce() {
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const auto [c, x] = queue_[q];
      for (const auto& w : rotations_[static_cast<std::size_t>(x)]) {
        if (!scan(c, w)) {
          queue_.clear();
          return false;
        }
      }
    }
    queue_.clear();
    return true;
  }

  bool scan(int c, const std::vector<int>& w) {
    const int len = static_cast<int>(w.size());
    int f = c;
    int i = 0;
    while (i < len && at(f, w[static_cast<std::size_t>(i)]) != kUndefined) {
      f = at(f, w[static_cast<std::size_t>(i)]);
      ++i;
    }
    if (i == len) return f == c;
    int b = c;
    int j = len - 1;
    while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) != kUndefined) {
      b = at(b, w[static_cast<std::size_t>(j)] ^ 1);
      --j;
    }
    if (j < i) return f == b;
    if (j == i) {
      const int x = w[static_cast<std::size_t>(i)];
      if (at(b, x ^ 1) != kUndefined) return at(b, x ^ 1) == f;
      set(f, x, b);
    }
    return true;
  }

  bool torsion_ok() {
    for (const auto& [word, order] : torsion_) {
      for (int c = 0; c < cosets_; ++c) {
        int pos = c;
        for (int k = 1; k < order; ++k) {
          for (int x : word) {
            pos = at(pos, x);
            if (pos == kUndefined) break;
          }
          if (pos == kUndefined) break;
          if (pos == c) return false;
        }
      }
    }
    return true;
  }

  // False when some basepoint change yields a standardized table that is
  // already smaller on the defined prefix.
  bool canonical() {
    std::vector<int>& old_to_new = scratch_map_;
    std::vector<int>& order = scratch_order_;
    for (int base = 1; base < cosets_; ++base) {
      old_to_new.assign(static_cast<std::size_t>(cosets_), kUndefined);
      order.clear();
      old_to_new[static_cast<std::size_t>(base)] = 0;
      order.push_back(base);
      bool decided = false;
      for (int r = 0; r < cosets_ && !decided; ++r) {
        if (r >= static_cast<int>(order.size())) break;
        const int old_row = order[static_cast<std::size_t>(r)];
        for (int x = 0; x < cols_; ++x) {
          const int o = at(r, x);
          const int e = at(old_row, x);
          if (o == kUndefined || e == kUndefined) {
            decided = true;
            break;
          }
          int v = old_to_new[static_cast<std::size_t>(e)];
          if (v == kUndefined) {
            v = static_cast<int>(order.size());
            old_to_new[static_cast<std::size_t>(e)] = v;
            order.push_back(e);
          }
          if (v < o) return false;
          if (v > o) {
            decided = true;
            break;
          }
        }
      }
    }
    return true;
  }

  bool first_undefined(int& c, int& x) {
    for (int r = 0; r < cosets_; ++r) {
      for (int y = 0; y < cols_; ++y) {
        if (at(r, y) == kUndefined) {
          c = r;
          x = y;
          return true;
        }
      }
    }
    return false;
  }

  void explore(std::vector<std::vector<int>>& found, int depth,
               int frontier_depth, std::vector<Snapshot>* frontier) {
    if (!limits_.tick()) return;
    int c = 0;
    int x = 0;
    if (!first_undefined(c, x)) {
      if (cosets_ == index_) {
        found.emplace_back(table_.begin(),
                           table_.begin() + static_cast<std::ptrdiff_t>(index_ * cols_));
      }
      return;
    }
    if (frontier != nullptr && depth == frontier_depth) {
      frontier->push_back(snapshot());
      return;
    }
    const int cosets = cosets_;
    const std::size_t mark = trail_.size();
    const int choices = cosets < index_ ? cosets + 1 : cosets;
    for (int d = 0; d < choices; ++d) {
      if (d < cosets && at(d, x ^ 1) != kUndefined) continue;
      if (d == cosets) cosets_ = cosets + 1;
      set(c, x, d);
      if (deduce() && torsion_ok() && canonical()) {
        explore(found, depth + 1, frontier_depth, frontier);
      }
      undo(mark, cosets);
      if (stopped()) return;
    }
  }

  int cols_;
  int index_;
  const std::vector<std::vector<std::vector<int>>>& rotations_;
  Limits& limits_;
  std::vector<std::pair<std::vector<int>, int>> torsion_;
  std::vector<int> table_;
  int cosets_ = 1;
  std::vector<int> trail_;
  std::vector<std::pair<int, int>> queue_;
  std::vector<int> scratch_map_;
  std::vector<int> scratch_order_;
};

std::vector<std::vector<int>> search_index(
    const GroupPresentation& p,
    const std::vector<std::vector<std::vector<int>>>& rotations, int index,
    const LowIndexOptions& options, Limits& limits) {
  std::vector<std::vector<int>> found;
  Search root(p, rotations, index, options.torsion_free_only, limits);
  if (options.jobs <= 1) {
    root.run(found);
    return found;
  }
  // Grow a frontier deep enough to keep every worker busy.
  std::vector<Snapshot> frontier{root.snapshot()};
  for (int round = 0; round < 8; ++round) {
    if (frontier.size() >= static_cast<std::size_t>(16 * options.jobs)) break;
    std::vector<Snapshot> next;
    for (const Snapshot& s : frontier) {
      root.load(s);
      root.run(found, 1, &next);
    }
    if (next.empty()) {
      frontier.clear();
      break;
    }
    frontier = std::move(next);
  }
  std::atomic<std::size_t> cursor{0};
  std::mutex merge;
  std::vector<std::thread> workers;
  for (int w = 0; w < options.jobs; ++w) {
    workers.emplace_back([&] {
      Search local(p, rotations, index, options.torsion_free_only, limits);
      std::vector<std::vector<int>> mine;
      for (;;) {
        const std::size_t k = cursor.fetch_add(1);
        if (k >= frontier.size() || local.stopped()) break;
        local.load(frontier[k]);
        local.run(mine);
      }
      std::lock_guard lock(merge);
      for (auto& t : mine) found.push_back(std::move(t));
    });
  }
  for (auto& t : workers) t.join();
  return found;
}

}  // namespace

LowIndexResult low_index_classes(std::shared_ptr<const GroupPresentation> p,
                                 int d_max, const LowIndexOptions& options) {
  if (!p) throw InputError("low_index_classes needs a presentation");
  if (d_max < 1) throw InputError("maximum index must be at least 1");
  const auto rotations = relator_rotations(*p);
  Limits limits(options.budget);
  LowIndexResult result;
  const int g = p->generator_count();
  for (int index = 1; index <= d_max; ++index) {
    auto tables = search_index(*p, rotations, index, options, limits);
    if (limits.stop) {
      result.nodes = limits.nodes;
      throw BudgetExhausted("search budget exhausted at index " +
                                std::to_string(index),
                            std::move(result));
    }
    std::sort(tables.begin(), tables.end());
    tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
    for (auto& t : tables) {
      result.classes.push_back(
          SubgroupClass{p, CosetTable(g, index, std::move(t)), {}});
    }
    result.complete_through = index;
  }
  result.nodes = limits.nodes;
  return result;
}

SignatureVector eta_from_classes(const LowIndexResult& r, int d_max) {
  SignatureVector v;
  for (int d = 2; d <= d_max; ++d) {
    v.counts.push_back(static_cast<std::uint64_t>(
        std::count_if(r.classes.begin(), r.classes.end(),
                      [d](const SubgroupClass& s) { return s.index() == d; })));
  }
  return v;
}

SignatureVector eta_signature(std::shared_ptr<const GroupPresentation> p,
                              int d_max, const LowIndexOptions& options) {
  return eta_from_classes(low_index_classes(std::move(p), d_max, options), d_max);
}

}  // namespace bianchi

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

#include "bianchi/geometry.hpp"

#include <algorithm>
#include <complex>
#include <deque>
#include <functional>
#include <set>

namespace bianchi {
namespace {

using cd = std::complex<double>;

// pair -> third point of the unique line through it, -1 if none.
// Returns false when some pair lies on two lines.
bool collinearity(int points, const std::vector<Line>& lines, std::vector<int>& third) {
  third.assign(static_cast<std::size_t>(points * points), -1);
  for (const Line& l : lines) {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        int& slot = third[static_cast<std::size_t>(l[static_cast<std::size_t>(a)] * points +
                                                   l[static_cast<std::size_t>(b)])];
        if (slot >= 0) return false;
        slot = l[static_cast<std::size_t>(3 - a - b)];
      }
    }
  }
  return true;
}

std::vector<int> line_degrees(int points, const std::vector<Line>& lines) {
  std::vector<int> deg(static_cast<std::size_t>(points), 0);
  for (const Line& l : lines) {
    for (int p : l) ++deg[static_cast<std::size_t>(p)];
  }
  return deg;
}

// Every point on the same positive number of lines.
bool regular(int points, const std::vector<Line>& lines) {
  const auto deg = line_degrees(points, lines);
  return !deg.empty() && deg.front() > 0 &&
         std::all_of(deg.begin(), deg.end(), [&](int v) { return v == deg.front(); });
}

bool linear_and_regular(int points, const std::vector<Line>& lines) {
  std::vector<int> third;
  return collinearity(points, lines, third) && regular(points, lines);
}

std::vector<std::vector<int>> adjacency(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

// Shortest cycle through BFS from every vertex in `subset`; 0 if acyclic.
int girth_of(const std::vector<std::vector<int>>& adj, const std::vector<int>& subset) {
  int best = 0;
  std::vector<int> dist(adj.size());
  std::vector<int> parent(adj.size());
  for (int s : subset) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (parent[static_cast<std::size_t>(u)] != v) {
          const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<std::pair<int, int>> pair_graph(const std::vector<Line>& lines) {
  std::set<std::pair<int, int>> edges;
  for (const Line& l : lines) {
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        const int x = l[static_cast<std::size_t>(a)];
        const int y = l[static_cast<std::size_t>(b)];
        edges.insert({std::min(x, y), std::max(x, y)});
      }
    }
  }
  return {edges.begin(), edges.end()};
}

bool real_nonzero(cd b, double tol) { return std::abs(b) > tol && std::abs(b.imag()) < tol; }

}  // namespace

std::string_view to_string(Recognition r) {
  switch (r) {
    case Recognition::hesse_configuration: return "hesse_configuration";
    case Recognition::gq22: return "gq22";
    case Recognition::petersen_component: return "petersen_component";
    case Recognition::none: return "none";
  }
  return "none";
}

std::vector<Line> hesse_configuration_lines() {
  std::set<Line> lines;
  const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  for (const auto& v : dirs) {
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        Line l{};
        for (int k = 0; k < 3; ++k) {
          l[static_cast<std::size_t>(k)] = 3 * ((x + k * v[0]) % 3) + (y + k * v[1]) % 3;
        }
        std::sort(l.begin(), l.end());
        lines.insert(l);
      }
    }
  }
  return {lines.begin(), lines.end()};
}

std::vector<Line> gq22_lines() {
  // Totally isotropic lines of the symplectic form on F_2^4; point v-1
  // stands for the nonzero vector v.
  auto form = [](int u, int v) {
    const int a = ((u & 1) * ((v >> 1) & 1)) ^ (((u >> 1) & 1) * (v & 1));
    const int b = (((u >> 2) & 1) * ((v >> 3) & 1)) ^ (((u >> 3) & 1) * ((v >> 2) & 1));
    return a ^ b;
  };
  std::set<Line> lines;
  for (int u = 1; u < 16; ++u) {
    for (int v = u + 1; v < 16; ++v) {
      if (form(u, v) != 0) continue;
      Line l{u - 1, v - 1, (u ^ v) - 1};
      std::sort(l.begin(), l.end());
      lines.insert(l);
    }
  }
  return {lines.begin(), lines.end()};
}

bool incidence_isomorphic(int points, const std::vector<Line>& a, const std::vector<Line>& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> ta;
  std::vector<int> tb;
  if (!collinearity(points, a, ta) || !collinearity(points, b, tb)) return false;
  auto da = line_degrees(points, a);
  auto db = line_degrees(points, b);
  {
    auto sa = da;
    auto sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // Breadth-first point order keeps each new point collinear with earlier ones.
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(points), false);
  for (int s = 0; s < points; ++s) {
    if (placed[static_cast<std::size_t>(s)]) continue;
    std::deque<int> queue{s};
    placed[static_cast<std::size_t>(s)] = true;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (int v = 0; v < points; ++v) {
        if (!placed[static_cast<std::size_t>(v)] &&
            ta[static_cast<std::size_t>(u * points + v)] >= 0) {
          placed[static_cast<std::size_t>(v)] = true;
          queue.push_back(v);
        }
      }
    }
  }
  std::vector<int> image(static_cast<std::size_t>(points), -1);
  std::vector<bool> used(static_cast<std::size_t>(points), false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const int p = order[k];
    for (int q = 0; q < points; ++q) {
      if (used[static_cast<std::size_t>(q)] ||
          db[static_cast<std::size_t>(q)] != da[static_cast<std::size_t>(p)]) {
        continue;
      }
      bool ok = true;
      for (std::size_t m = 0; m < k && ok; ++m) {
        const int r = order[m];
        const int s = image[static_cast<std::size_t>(r)];
        const int ta3 = ta[static_cast<std::size_t>(p * points + r)];
        const int tb3 = tb[static_cast<std::size_t>(q * points + s)];
        if ((ta3 < 0) != (tb3 < 0)) ok = false;
        if (ok && ta3 >= 0 && image[static_cast<std::size_t>(ta3)] >= 0 &&
            image[static_cast<std::size_t>(ta3)] != tb3) {
          ok = false;
        }
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(p)] = q;
      used[static_cast<std::size_t>(q)] = true;
      if (extend(k + 1)) return true;
      image[static_cast<std::size_t>(p)] = -1;
      used[static_cast<std::size_t>(q)] = false;
    }
    return false;
  };
  return extend(0);
}

bool has_petersen_component(int vertices, const std::vector<std::pair<int, int>>& edges) {
  const auto adj = adjacency(vertices, edges);
  std::vector<bool> seen(static_cast<std::size_t>(vertices), false);
  for (int s = 0; s < vertices; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int v : adj[static_cast<std::size_t>(comp[i])]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          comp.push_back(v);
        }
      }
    }
    if (comp.size() != 10) continue;
    const bool cubic = std::all_of(comp.begin(), comp.end(), [&](int v) {
      return adj[static_cast<std::size_t>(v)].size() == 3;
    });
    if (cubic && girth_of(adj, comp) == 5) return true;
  }
  return false;
}

GeometryInvariants geometry_from_lines(int points, std::vector<Line> lines, std::string rule) {
  GeometryInvariants g;
  g.rule = std::move(rule);
  for (Line& l : lines) std::sort(l.begin(), l.end());
  std::sort(lines.begin(), lines.end());
  g.point_count = points;
  g.line_count = static_cast<int>(lines.size());
  for (int deg : line_degrees(points, lines)) ++g.lines_per_point[deg];
  const auto edges = pair_graph(lines);
  const auto adj = adjacency(points, edges);
  for (const auto& a : adj) g.pair_graph_degrees.push_back(static_cast<int>(a.size()));
  std::sort(g.pair_graph_degrees.begin(), g.pair_graph_degrees.end());
  std::vector<int> all(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) all[static_cast<std::size_t>(i)] = i;
  g.girth = girth_of(adj, all);
  if (points == 9 && lines.size() == 12 &&
      incidence_isomorphic(9, lines, hesse_configuration_lines())) {
    g.recognized_as = Recognition::hesse_configuration;
  } else if (points == 15 && lines.size() == 15 &&
             incidence_isomorphic(15, lines, gq22_lines())) {
    g.recognized_as = Recognition::gq22;
  } else if (has_petersen_component(points, edges)) {
    g.recognized_as = Recognition::petersen_component;
  }
  g.lines = std::move(lines);
  return g;
}

GeometryInvariants triple_product_geometry(const std::vector<State>& states, double tol) {
  const auto n = static_cast<int>(states.size());
  std::vector<cd> overlap(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      overlap[static_cast<std::size_t>(i * n + j)] =
          states[static_cast<std::size_t>(i)].normalized().dot(
              states[static_cast<std::size_t>(j)].normalized());
    }
  }
  auto ip = [&](int i, int j) { return overlap[static_cast<std::size_t>(i * n + j)]; };
  auto bargmann = [&](int i, int j, int k) { return ip(i, j) * ip(j, k) * ip(k, i); };

  std::vector<Line> lines;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (real_nonzero(bargmann(i, j, k), tol)) lines.push_back({i, j, k});
      }
    }
  }
  if (linear_and_regular(n, lines)) return geometry_from_lines(n, lines, "bargmann-real");

  lines.clear();
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!real_nonzero(bargmann(0, i, j), tol)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (real_nonzero(bargmann(i, j, k), tol) && real_nonzero(bargmann(0, j, k), tol) &&
            real_nonzero(bargmann(0, i, k), tol)) {
          lines.push_back({i - 1, j - 1, k - 1});
        }
      }
    }
  }
  if (n > 1 && linear_and_regular(n - 1, lines)) {
    return geometry_from_lines(n - 1, lines, "bargmann-real-relative");
  }

  std::vector<std::pair<double, Line>> valued;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(ip(i, j)) <= tol) continue;
      for (int k = j + 1; k < n; ++k) {
        if (std::abs(ip(j, k)) <= tol || std::abs(ip(i, k)) <= tol) continue;
        valued.push_back({std::abs(bargmann(i, j, k)), {i, j, k}});
      }
    }
  }
  std::sort(valued.begin(), valued.end());
  for (std::size_t start = 0; start < valued.size();) {
    std::size_t end = start;
    lines.clear();
    while (end < valued.size() && valued[end].first - valued[start].first <= tol) {
      lines.push_back(valued[end].second);
      ++end;
    }
    if (regular(n, lines)) return geometry_from_lines(n, lines, "modulus-cluster");
    start = end;
  }
  return geometry_from_lines(n, {}, "none");
}

}  // namespace bianchi

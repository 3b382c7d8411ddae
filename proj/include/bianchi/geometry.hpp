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

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bianchi/pauli.hpp"

namespace bianchi {

enum class Recognition { hesse_configuration, gq22, petersen_component, none };

[[nodiscard]] std::string_view to_string(Recognition r);

using Line = std::array<int, 3>;

struct GeometryInvariants {
  /// Rule that produced the lines: "bargmann-real", "bargmann-real-relative",
  /// "modulus-cluster" or "none".
  std::string rule = "none";
  int point_count = 0;
  int line_count = 0;
  int points_per_line = 3;
  /// lines through a point -> number of such points.
  std::map<int, int> lines_per_point;
  /// Sorted degree sequence of the graph joining points that share a line.
  std::vector<int> pair_graph_degrees;
  /// 0 when the pair graph is acyclic.
  int girth = 0;
  Recognition recognized_as = Recognition::none;
  std::vector<Line> lines;
};

/// Incidence geometry of the orbit from Bargmann invariants
/// B(i,j,k) = <ψi|ψj><ψj|ψk><ψk|ψi> (so tr(ΠiΠjΠk) = B for unit states).
///
/// Lines are tried in order:
///  1. triples with real nonzero B, accepted when two points share at
///     most one line and every point is on the same positive number of lines;
///  2. relative to the fiducial (state 0): triples {i,j,k} of the other
///     states such that B is real and nonzero on all four 3-subsets of
///     {0,i,j,k}, accepted under the same conditions;
///  3. clusters of |B| over triples with pairwise nonzero overlaps, smallest
///     value first, accepted when every point lies on the same number of
///     lines.
/// Recognition tries exact isomorphism with the Hesse configuration AG(2,3)
/// and with GQ(2,2), then looks for a Petersen component in the pair graph.
[[nodiscard]] GeometryInvariants triple_product_geometry(const std::vector<State>& states,
                                                         double tol = 1e-7);

/// Invariants of an explicit line set on `points` points (recognition included).
[[nodiscard]] GeometryInvariants geometry_from_lines(int points, std::vector<Line> lines,
                                                     std::string rule);

/// Exact isomorphism of two 3-uniform incidence structures (point bijection
/// mapping lines onto lines).
[[nodiscard]] bool incidence_isomorphic(int points, const std::vector<Line>& a,
                                        const std::vector<Line>& b);

[[nodiscard]] std::vector<Line> hesse_configuration_lines();
[[nodiscard]] std::vector<Line> gq22_lines();

/// True when some connected component of the graph has 10 vertices, is
/// 3-regular and has girth 5 (hence is the Petersen graph).
[[nodiscard]] bool has_petersen_component(int vertices,
                                          const std::vector<std::pair<int, int>>& edges);

}  // namespace bianchi

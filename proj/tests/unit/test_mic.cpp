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

#include <cmath>
#include <complex>

#include "bianchi/errors.hpp"
#include "bianchi/fiducial.hpp"
#include "bianchi/geometry.hpp"
#include "bianchi/mic.hpp"
#include "bianchi/pauli.hpp"

using namespace bianchi;
using cd = std::complex<double>;

namespace {

State magic_qutrit() {
  State s(3);
  s << 0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
  return s;
}

State basis(int d, int k) {
  State s = State::Zero(d);
  s(k) = 1;
  return s;
}

}  // namespace

TEST_CASE("Pauli groups have d^2 projective elements") {
  for (int d : {2, 3, 4, 5, 6}) {
    CHECK(pauli_operators(PauliGroupSpec::make(d, PauliFlavor::qudit_weyl_heisenberg)).size() ==
          static_cast<std::size_t>(d * d));
  }
  CHECK(pauli_operators(PauliGroupSpec::make(4, PauliFlavor::multi_qubit)).size() == 16);
  CHECK_THROWS_AS((void)PauliGroupSpec::make(6, PauliFlavor::multi_qubit), InputError);
  CHECK_THROWS_AS((void)PauliGroupSpec::make(1, PauliFlavor::qudit_weyl_heisenberg), InputError);
  CHECK(PauliGroupSpec::default_for(4).flavor == PauliFlavor::multi_qubit);
}

TEST_CASE("stabilizer catalogs") {
  CHECK(stabilizer_catalog(PauliGroupSpec::default_for(3)).size() == 12);
  CHECK(stabilizer_catalog(PauliGroupSpec::default_for(2)).size() == 6);
  CHECK(stabilizer_catalog(PauliGroupSpec::default_for(5)).size() == 30);
  CHECK(stabilizer_catalog(PauliGroupSpec::default_for(4)).size() == 60);
  CHECK_FALSE(stabilizer_test_is_heuristic(PauliGroupSpec::default_for(3)));
  CHECK(stabilizer_test_is_heuristic(PauliGroupSpec::default_for(6)));
  for (int d : {2, 3, 4, 5}) {
    const auto g = PauliGroupSpec::default_for(d);
    for (const State& s : stabilizer_catalog(g)) CHECK_FALSE(non_stabilizer(s, g));
  }
  CHECK(non_stabilizer(magic_qutrit(), PauliGroupSpec::default_for(3)));
}

TEST_CASE("the qutrit magic state is a Hesse SIC fiducial") {
  const auto g = PauliGroupSpec::default_for(3);
  const MicReport r = mic_report({magic_qutrit(), {}}, g);
  CHECK(r.gram_rank == 9);
  CHECK(r.is_mic);
  CHECK(r.is_sic);
  REQUIRE(r.angle_classes.size() == 1);
  CHECK(std::abs(r.angle_classes[0].value - 0.5) < 1e-10);
  CHECK(r.resolution_defect < 1e-10);
  CHECK(r.geometry.recognized_as == Recognition::hesse_configuration);
  CHECK(r.geometry.point_count == 9);
  CHECK(r.geometry.line_count == 12);
}

TEST_CASE("a basis vector is never a MIC") {
  for (int d : {2, 3, 4, 5, 6}) {
    const auto orbit = pauli_orbit(basis(d, 0), PauliGroupSpec::default_for(d));
    CHECK(gram_rank(orbit) == d);
  }
}

TEST_CASE("Born probabilities") {
  const auto g = PauliGroupSpec::default_for(3);
  const auto orbit = pauli_orbit(magic_qutrit(), g);
  const Operator mixed = Operator::Identity(3, 3) / 3.0;
  for (double p : povm_probabilities(mixed, orbit)) CHECK(std::abs(p - 1.0 / 9) < 1e-12);
  Operator pure = magic_qutrit() * magic_qutrit().adjoint();
  double total = 0;
  for (double p : povm_probabilities(pure, orbit)) total += p;
  CHECK(std::abs(total - 1) < 1e-12);
  Operator bad = mixed;
  bad(0, 1) = cd(0.1, 0);
  CHECK_THROWS_AS((void)povm_probabilities(bad, orbit), InputError);
  CHECK_THROWS_AS((void)povm_probabilities(2.0 * mixed, orbit), InputError);
}

TEST_CASE("fiducials from a permutation representation") {
  // Transpositions (1 2) on three points give the magic state (0, 1, -1).
  PermutationRep rep{3, {{0, 2, 1}, {1, 0, 2}}};
  FiducialOptions o;
  o.filter = PauliGroupSpec::default_for(3);
  const auto fids = fiducials_from_perm_rep(rep, o, {"a", "b"});
  REQUIRE_FALSE(fids.empty());
  bool found_sic = false;
  for (const auto& f : fids) {
    CHECK(std::abs(f.amplitudes.norm() - 1) < 1e-12);
    found_sic = found_sic || mic_report(f, *o.filter).is_sic;
  }
  CHECK(found_sic);
}

TEST_CASE("reference incidence geometries") {
  const auto hesse = geometry_from_lines(9, hesse_configuration_lines(), "test");
  CHECK(hesse.recognized_as == Recognition::hesse_configuration);
  CHECK(hesse.lines_per_point.at(4) == 9);
  const auto gq = geometry_from_lines(15, gq22_lines(), "test");
  CHECK(gq.recognized_as == Recognition::gq22);
  CHECK(gq.line_count == 15);
  CHECK(gq.lines_per_point.at(3) == 15);
  CHECK_FALSE(incidence_isomorphic(9, hesse_configuration_lines(),
                                   std::vector<Line>(hesse_configuration_lines().begin(),
                                                     hesse_configuration_lines().end() - 1)));
  // Relabeling points keeps the isomorphism type.
  std::vector<Line> shifted;
  for (const Line& l : gq22_lines()) shifted.push_back({(l[0] + 4) % 15, (l[1] + 4) % 15, (l[2] + 4) % 15});
  CHECK(incidence_isomorphic(15, gq22_lines(), shifted));
}

TEST_CASE("Petersen components") {
  std::vector<std::pair<int, int>> petersen;
  for (int i = 0; i < 5; ++i) {
    petersen.emplace_back(i, (i + 1) % 5);
    petersen.emplace_back(i, i + 5);
    petersen.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  CHECK(has_petersen_component(10, petersen));
  // Two copies side by side.
  auto twice = petersen;
  for (const auto& [a, b] : petersen) twice.emplace_back(a + 10, b + 10);
  CHECK(has_petersen_component(20, twice));
  // A prism graph on 10 vertices is cubic but has girth 4.
  std::vector<std::pair<int, int>> prism;
  for (int i = 0; i < 5; ++i) {
    prism.emplace_back(i, (i + 1) % 5);
    prism.emplace_back(i, i + 5);
    prism.emplace_back(i + 5, (i + 1) % 5 + 5);
  }
  CHECK_FALSE(has_petersen_component(10, prism));
}

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

#include <vector>

#include "bianchi/fiducial.hpp"
#include "bianchi/geometry.hpp"
#include "bianchi/pauli.hpp"

namespace bianchi {

struct Tolerances {
  /// Singular values below rank_tol·σ_max count as zero.
  double rank_tol = 1e-8;
  double angle_tol = 1e-7;
  double sic_tol = 1e-9;
};

struct AngleClass {
  double value = 0;
  int multiplicity = 0;
};

/// Numerical rank of G_ij = |<ψi|ψj>|^2.
[[nodiscard]] int gram_rank(const std::vector<State>& states, double tol = 1e-8);

/// Distinct |<ψi|ψj>| over i < j, clustered within tol, ascending.
[[nodiscard]] std::vector<AngleClass> angle_spectrum(const std::vector<State>& states,
                                                     double tol = 1e-7);

/// All off-diagonal |<ψi|ψj>|^2 equal 1/(d+1) within tol (and d^2 states).
[[nodiscard]] bool is_sic(const std::vector<State>& states, double tol = 1e-9);

/// max |Σ Πi / d - I| over matrix entries.
[[nodiscard]] double resolution_defect(const std::vector<State>& states);

/// p(i) = <ψi|ρ|ψi>/d. Throws InputError unless ρ is Hermitian, positive
/// semidefinite and of trace 1 (within 1e-10).
[[nodiscard]] std::vector<double> povm_probabilities(const Operator& rho,
                                                     const std::vector<State>& states);

struct MicReport {
  PauliGroupSpec spec;
  FiducialState fiducial;
  int gram_rank = 0;
  std::vector<AngleClass> angle_classes;
  bool is_sic = false;
  bool is_mic = false;
  double resolution_defect = 0;
  bool non_stabilizer = false;
  bool stabilizer_test_heuristic = false;
  GeometryInvariants geometry;
};

[[nodiscard]] MicReport mic_report(const FiducialState& f, const PauliGroupSpec& g,
                                   const Tolerances& tol = {});

}  // namespace bianchi

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

#include <Eigen/Dense>
#include <string_view>
#include <vector>

namespace bianchi {

using State = Eigen::VectorXcd;
using Operator = Eigen::MatrixXcd;

enum class PauliFlavor { qudit_weyl_heisenberg, multi_qubit };

[[nodiscard]] std::string_view to_string(PauliFlavor f);

struct PauliGroupSpec {
  int dimension = 2;
  PauliFlavor flavor = PauliFlavor::qudit_weyl_heisenberg;
  /// Number of qubits for the multi-qubit flavor, 0 otherwise.
  int qubits = 0;

  /// Throws InputError for d < 2 or a multi-qubit d that is not 2^n.
  static PauliGroupSpec make(int dimension, PauliFlavor flavor);
  /// Two qubits for d = 4, clock-and-shift otherwise.
  static PauliGroupSpec default_for(int dimension);
};

/// One representative per projective Pauli element, d^2 in total.
/// Qudit: X^a Z^b at position a*d + b, X|j> = |j+1>, Z|j> = w^j |j>.
/// Multi-qubit: tensor products of I, X, Y, Z, first factor most significant.
[[nodiscard]] std::vector<Operator> pauli_operators(const PauliGroupSpec& g);

/// The d^2 states D·psi. Throws InputError on a dimension mismatch.
[[nodiscard]] std::vector<State> pauli_orbit(const State& fiducial,
                                             const PauliGroupSpec& g);

/// Stabilizer states known exactly: the d(d+1) eigenstates of the d+1
/// maximal abelian subgroups for prime d, and the 60 two-qubit stabilizer
/// states. Empty where only the heuristic test is available.
[[nodiscard]] std::vector<State> stabilizer_catalog(const PauliGroupSpec& g);

/// True when the stabilizer test falls back to "eigenvector of some
/// non-identity Pauli element" (composite qudit dimensions, > 2 qubits).
[[nodiscard]] bool stabilizer_test_is_heuristic(const PauliGroupSpec& g);

/// False iff the state is, up to phase and within tol, a stabilizer state
/// (or, under the heuristic, an eigenvector of a non-identity Pauli).
[[nodiscard]] bool non_stabilizer(const State& f, const PauliGroupSpec& g,
                                  double tol = 1e-9);

}  // namespace bianchi

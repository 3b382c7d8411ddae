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

#include "bianchi/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "bianchi/errors.hpp"

namespace bianchi {
namespace {

using cd = std::complex<double>;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

Operator shift(int d) {
  Operator x = Operator::Zero(d, d);
  for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

Operator clock(int d) {
  Operator z = Operator::Zero(d, d);
  for (int j = 0; j < d; ++j) z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / d);
  return z;
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::vector<Operator> single_qubit_paulis() {
  Operator i = Operator::Identity(2, 2);
  Operator x(2, 2);
  x << 0, 1, 1, 0;
  Operator y(2, 2);
  y << 0, cd(0, -1), cd(0, 1), 0;
  Operator z(2, 2);
  z << 1, 0, 0, -1;
  return {i, x, y, z};
}

// Common eigenvectors of a commuting pair of Hermitian Paulis.
void joint_eigenstates(const Operator& p, const Operator& q, std::vector<State>& out) {
  const auto d = p.rows();
  const Operator id = Operator::Identity(d, d);
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      const Operator proj = (id + s1 * p) * (id + s2 * q) / 4.0;
      Eigen::Index best = 0;
      proj.colwise().norm().maxCoeff(&best);
      State v = proj.col(best);
      out.push_back(v / v.norm());
    }
  }
}

bool same_ray(const State& a, const State& b, double tol) {
  return std::abs(std::abs(a.dot(b)) - 1.0) < tol;
}

}  // namespace

std::string_view to_string(PauliFlavor f) {
  return f == PauliFlavor::multi_qubit ? "multi_qubit" : "qudit_weyl_heisenberg";
}

PauliGroupSpec PauliGroupSpec::make(int dimension, PauliFlavor flavor) {
  if (dimension < 2) throw InputError("Pauli group dimension must be at least 2");
  PauliGroupSpec g{dimension, flavor, 0};
  if (flavor == PauliFlavor::multi_qubit) {
    int n = 0;
    int v = dimension;
    while (v % 2 == 0) {
      v /= 2;
      ++n;
    }
    if (v != 1) {
      throw InputError("multi-qubit flavor needs a power of 2, got " + std::to_string(dimension));
    }
    g.qubits = n;
  }
  return g;
}

PauliGroupSpec PauliGroupSpec::default_for(int dimension) {
  return make(dimension,
              dimension == 4 ? PauliFlavor::multi_qubit : PauliFlavor::qudit_weyl_heisenberg);
}

std::vector<Operator> pauli_operators(const PauliGroupSpec& g) {
  const int d = g.dimension;
  std::vector<Operator> ops;
  if (g.flavor == PauliFlavor::qudit_weyl_heisenberg) {
    const Operator x = shift(d);
    const Operator z = clock(d);
    Operator xa = Operator::Identity(d, d);
    for (int a = 0; a < d; ++a) {
      Operator zb = Operator::Identity(d, d);
      for (int b = 0; b < d; ++b) {
        ops.push_back(xa * zb);
        zb = zb * z;
      }
      xa = xa * x;
    }
    return ops;
  }
  ops.push_back(Operator::Identity(1, 1));
  const auto singles = single_qubit_paulis();
  for (int k = 0; k < g.qubits; ++k) {
    std::vector<Operator> next;
    for (const Operator& a : ops) {
      for (const Operator& s : singles) next.push_back(kron(a, s));
    }
    ops = std::move(next);
  }
  return ops;
}

std::vector<State> pauli_orbit(const State& fiducial, const PauliGroupSpec& g) {
  if (fiducial.size() != g.dimension) {
    throw InputError("fiducial has dimension " + std::to_string(fiducial.size()) +
                     ", Pauli group has " + std::to_string(g.dimension));
  }
  std::vector<State> out;
  for (const Operator& op : pauli_operators(g)) out.push_back(op * fiducial);
  return out;
}

bool stabilizer_test_is_heuristic(const PauliGroupSpec& g) {
  if (g.flavor == PauliFlavor::multi_qubit) return g.qubits > 2;
  return !is_prime(g.dimension);
}

std::vector<State> stabilizer_catalog(const PauliGroupSpec& g) {
  std::vector<State> out;
  if (stabilizer_test_is_heuristic(g)) return out;
  const int d = g.dimension;
  if (g.flavor == PauliFlavor::multi_qubit && g.qubits == 2) {
    const auto ops = pauli_operators(g);
    std::vector<std::pair<int, int>> groups;
    std::vector<std::vector<int>> seen;
    for (int i = 1; i < 16; ++i) {
      for (int j = i + 1; j < 16; ++j) {
        const Operator& p = ops[static_cast<std::size_t>(i)];
        const Operator& q = ops[static_cast<std::size_t>(j)];
        if (!(p * q - q * p).isZero(1e-12)) continue;
        // The subgroup {I, p, q, pq} is labelled by the index of pq.
        const Operator pq = p * q;
        int k = 0;
        for (int m = 1; m < 16; ++m) {
          const cd overlap = (ops[static_cast<std::size_t>(m)].adjoint() * pq).trace() / 4.0;
          if (std::abs(std::abs(overlap) - 1.0) < 1e-12) k = m;
        }
        std::vector<int> key{i, j, k};
        std::sort(key.begin(), key.end());
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        joint_eigenstates(p, q, out);
      }
    }
    return out;
  }
  // Prime d (and one qubit): eigenbases of Z and of X Z^b.
  for (int j = 0; j < d; ++j) out.push_back(State::Unit(d, j));
  const Operator x = shift(d);
  const Operator z = clock(d);
  Operator xzb = x;
  for (int b = 0; b < d; ++b) {
    Eigen::ComplexEigenSolver<Operator> es(xzb);
    for (int j = 0; j < d; ++j) {
      State v = es.eigenvectors().col(j);
      out.push_back(v / v.norm());
    }
    xzb = xzb * z;
  }
  return out;
}

bool non_stabilizer(const State& f, const PauliGroupSpec& g, double tol) {
  if (f.size() != g.dimension) throw InputError("state dimension does not match the Pauli group");
  const State v = f / f.norm();
  if (!stabilizer_test_is_heuristic(g)) {
    for (const State& s : stabilizer_catalog(g)) {
      if (same_ray(s, v, tol)) return false;
    }
    return true;
  }
  const auto ops = pauli_operators(g);
  for (std::size_t k = 1; k < ops.size(); ++k) {
    const State w = ops[k] * v;
    if (same_ray(w / w.norm(), v, tol)) return false;
  }
  return true;
}

}  // namespace bianchi

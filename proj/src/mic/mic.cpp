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

#include "bianchi/mic.hpp"

#include <algorithm>
#include <cmath>

#include "bianchi/errors.hpp"

namespace bianchi {
namespace {

Eigen::MatrixXd gram(const std::vector<State>& states) {
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = std::norm(states[static_cast<std::size_t>(i)].normalized().dot(
          states[static_cast<std::size_t>(j)].normalized()));
    }
  }
  return g;
}

}  // namespace

int gram_rank(const std::vector<State>& states, double tol) {
  if (states.empty()) return 0;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram(states));
  const auto& sv = svd.singularValues();
  const double cutoff = tol * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return rank;
}

std::vector<AngleClass> angle_spectrum(const std::vector<State>& states, double tol) {
  std::vector<double> values;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      values.push_back(std::abs(states[i].normalized().dot(states[j].normalized())));
    }
  }
  std::sort(values.begin(), values.end());
  std::vector<AngleClass> out;
  for (std::size_t start = 0; start < values.size();) {
    std::size_t end = start;
    double sum = 0;
    while (end < values.size() && values[end] - values[start] <= tol) sum += values[end++];
    out.push_back({sum / static_cast<double>(end - start), static_cast<int>(end - start)});
    start = end;
  }
  return out;
}

bool is_sic(const std::vector<State>& states, double tol) {
  if (states.empty()) return false;
  const auto d = static_cast<double>(states.front().size());
  if (states.size() != static_cast<std::size_t>(d * d)) return false;
  const Eigen::MatrixXd g = gram(states);
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (i != j && std::abs(g(i, j) - 1.0 / (d + 1.0)) > tol) return false;
    }
  }
  return true;
}

double resolution_defect(const std::vector<State>& states) {
  if (states.empty()) return 0;
  const auto d = states.front().size();
  Operator sum = Operator::Zero(d, d);
  for (const State& s : states) {
    const State v = s.normalized();
    sum += v * v.adjoint();
  }
  return (sum / static_cast<double>(d) - Operator::Identity(d, d)).cwiseAbs().maxCoeff();
}

std::vector<double> povm_probabilities(const Operator& rho, const std::vector<State>& states) {
  constexpr double kTol = 1e-10;
  if (rho.rows() != rho.cols()) throw InputError("density operator must be square");
  if (!states.empty() && states.front().size() != rho.rows()) {
    throw InputError("density operator and states differ in dimension");
  }
  if (!(rho - rho.adjoint()).isZero(kTol)) throw InputError("density operator is not Hermitian");
  if (std::abs(rho.trace() - std::complex<double>(1.0)) > kTol) {
    throw InputError("density operator does not have trace 1");
  }
  const Eigen::SelfAdjointEigenSolver<Operator> es(rho);
  if (es.eigenvalues().minCoeff() < -kTol) {
    throw InputError("density operator is not positive semidefinite");
  }
  const auto d = static_cast<double>(rho.rows());
  std::vector<double> p;
  for (const State& s : states) {
    const State v = s.normalized();
    p.push_back(v.dot(rho * v).real() / d);
  }
  return p;
}

MicReport mic_report(const FiducialState& f, const PauliGroupSpec& g, const Tolerances& tol) {
  MicReport r;
  r.spec = g;
  r.fiducial = f;
  const auto orbit = pauli_orbit(f.amplitudes, g);
  r.gram_rank = gram_rank(orbit, tol.rank_tol);
  r.angle_classes = angle_spectrum(orbit, tol.angle_tol);
  r.is_mic = r.gram_rank == g.dimension * g.dimension;
  r.is_sic = r.is_mic && is_sic(orbit, tol.sic_tol);
  r.resolution_defect = resolution_defect(orbit);
  r.non_stabilizer = non_stabilizer(f.amplitudes, g);
  r.stabilizer_test_heuristic = stabilizer_test_is_heuristic(g);
  r.geometry = triple_product_geometry(orbit, tol.angle_tol);
  return r;
}

}  // namespace bianchi

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

#include <optional>
#include <string>
#include <vector>

#include "bianchi/coset_table.hpp"
#include "bianchi/pauli.hpp"

namespace bianchi {

struct FiducialProvenance {
  std::string source;
  /// Word whose permutation matrix has this eigenvector.
  std::string word;
  /// Support of the state, in cycle order (0-based points).
  std::vector<int> cycle;
  /// Eigenvalue exp(2πi·j/ℓ) with j = eigenvalue_index, ℓ = cycle length.
  int eigenvalue_index = 0;
};

/// Unit vector of dimension d.
struct FiducialState {
  State amplitudes;
  FiducialProvenance provenance;
};

struct FiducialOptions {
  /// Words over the generator images (and inverses) up to this length.
  int max_word_length = 2;
  /// When set, keep only candidates passing non_stabilizer for it.
  std::optional<PauliGroupSpec> filter;
  std::string source;
  double tol = 1e-9;
};

/// Cycle-supported eigenvectors of the permutation matrices of short
/// words: on a cycle (c0 .. c_{ℓ-1}) with c_{k+1} = π(c_k), amplitude
/// ζ^{-jk}/√ℓ at c_k for ζ = exp(2πi/ℓ), zero elsewhere. Candidates
/// that agree up to phase are listed once, first occurrence kept.
[[nodiscard]] std::vector<FiducialState> fiducials_from_perm_rep(
    const PermutationRep& r, const FiducialOptions& options = {},
    const std::vector<std::string>& generator_names = {});

}  // namespace bianchi

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

#include <string>
#include <vector>

#include "bianchi/word.hpp"

namespace bianchi {

/// Meridian/longitude words of one cusp.
///
/// `extra` holds further words of the cusp stabilizer when it is larger
/// than the Z^2 spanned by the pair (cusps of Bianchi orbifolds carry a
/// finite rotation). Orbit counting uses all of them.
struct PeripheralPair {
  Word meridian;
  Word longitude;
  std::vector<Word> extra;

  friend bool operator==(const PeripheralPair&, const PeripheralPair&) = default;
};

/// An element of finite order, listed once per conjugacy class of cyclic
/// subgroups.
struct TorsionRep {
  Word word;
  int order = 2;

  friend bool operator==(const TorsionRep&, const TorsionRep&) = default;
};

/// Finitely presented group with optional cusp and torsion data.
/// Immutable after construction; all stored words are freely reduced.
class GroupPresentation {
 public:
  GroupPresentation() = default;

  /// Reduces every word and checks the invariants; throws InputError.
  GroupPresentation(std::vector<std::string> generator_names,
                    std::vector<Word> relators,
                    std::vector<PeripheralPair> peripheral = {},
                    std::vector<TorsionRep> torsion = {});

  [[nodiscard]] int generator_count() const {
    return static_cast<int>(names_.size());
  }
  [[nodiscard]] const std::vector<std::string>& generator_names() const {
    return names_;
  }
  [[nodiscard]] const std::vector<Word>& relators() const { return relators_; }
  [[nodiscard]] const std::vector<PeripheralPair>& peripheral() const {
    return peripheral_;
  }
  [[nodiscard]] const std::vector<TorsionRep>& torsion() const {
    return torsion_;
  }
  [[nodiscard]] int cusp_count() const {
    return static_cast<int>(peripheral_.size());
  }

  /// Copy with one more relator (reduced; empty relators are dropped).
  [[nodiscard]] GroupPresentation with_relator(const Word& r) const;
  /// Copy with the peripheral pair at `cusp` removed.
  [[nodiscard]] GroupPresentation without_cusp(int cusp) const;
  /// Copy with generators renumbered: new generator i is old generator
  /// perm[i] (0-based). Names follow their generators.
  [[nodiscard]] GroupPresentation relabeled(std::span<const int> perm) const;

  friend bool operator==(const GroupPresentation&,
                         const GroupPresentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::vector<PeripheralPair> peripheral_;
  std::vector<TorsionRep> torsion_;
};

}  // namespace bianchi

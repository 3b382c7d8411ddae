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

#include <cstdint>
#include <vector>

namespace bianchi {

/// Finitely generated abelian group Z^free_rank ⊕ Z/t1 ⊕ ... ⊕ Z/tk with
/// t1 | t2 | ... | tk and every ti ≥ 2.
struct AbelianGroupType {
  int free_rank = 0;
  std::vector<std::uint64_t> torsion;

  friend bool operator==(const AbelianGroupType&,
                         const AbelianGroupType&) = default;
};

}  // namespace bianchi

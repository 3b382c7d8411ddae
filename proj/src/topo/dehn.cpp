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

#include "bianchi/dehn.hpp"

#include <numeric>

#include "bianchi/errors.hpp"

namespace bianchi {

FillingSlope FillingSlope::make(int p, int q) {
  if (std::gcd(p, q) != 1) {
    throw InputError("slope (" + std::to_string(p) + "," + std::to_string(q) +
                     ") is not primitive");
  }
  return {p, q};
}

GroupPresentation dehn_fill(const GroupPresentation& p, int cusp, FillingSlope slope) {
  if (cusp < 0 || cusp >= p.cusp_count()) {
    throw InputError("cusp " + std::to_string(cusp) + " out of range; the group has " +
                     std::to_string(p.cusp_count()) + " cusps");
  }
  slope = FillingSlope::make(slope.p, slope.q);
  const PeripheralPair& pair = p.peripheral()[static_cast<std::size_t>(cusp)];
  const Word relator = power(pair.meridian, slope.p) * power(pair.longitude, slope.q);
  return p.with_relator(relator).without_cusp(cusp);
}

GroupPresentation dehn_fill(const CensusEntry& e, int cusp, FillingSlope slope) {
  return dehn_fill(e.presentation, cusp, slope);
}

}  // namespace bianchi

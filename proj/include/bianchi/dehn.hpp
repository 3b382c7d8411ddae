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

#include "bianchi/census.hpp"
#include "bianchi/presentation.hpp"

namespace bianchi {

/// Slope p·meridian + q·longitude; gcd(|p|, |q|) = 1.
struct FillingSlope {
  int p = 1;
  int q = 0;

  /// Throws InputError unless the slope is primitive.
  static FillingSlope make(int p, int q);
  friend bool operator==(const FillingSlope&, const FillingSlope&) = default;
};

/// Appends meridian^p · longitude^q and drops that cusp's peripheral pair.
/// Throws InputError for an out-of-range cusp or invalid slope.
[[nodiscard]] GroupPresentation dehn_fill(const GroupPresentation& p, int cusp,
                                          FillingSlope slope);
[[nodiscard]] GroupPresentation dehn_fill(const CensusEntry& e, int cusp,
                                          FillingSlope slope);

}  // namespace bianchi

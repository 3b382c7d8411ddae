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

#include "bianchi/census_validation.hpp"

#include <algorithm>

#include "bianchi/errors.hpp"
#include "bianchi/homology.hpp"

namespace bianchi {

bool ValidationReport::all_match() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const FieldComparison& c) { return c.match; });
}

ValidationReport validate_census_entry(const CensusEntry& e, int depth,
                                       const FingerprintOptions& options) {
  if (depth < 1) throw InputError("validation depth must be at least 1");
  ValidationReport r;
  r.entry = e.name;
  r.depth = depth;
  const InvariantFingerprint f = fingerprint(e.presentation, depth, options);
  if (!e.expected) return r;
  const ExpectedInvariants& x = *e.expected;

  if (!x.eta.empty() && depth >= 2) {
    const auto wanted = std::min<std::size_t>(x.eta.size(), static_cast<std::size_t>(depth - 1));
    const auto known = std::min<std::size_t>(wanted, f.eta.counts.size());
    SignatureVector exp{std::vector<std::uint64_t>(x.eta.begin(), x.eta.begin() + static_cast<std::ptrdiff_t>(wanted))};
    SignatureVector got{std::vector<std::uint64_t>(f.eta.counts.begin(), f.eta.counts.begin() + static_cast<std::ptrdiff_t>(known))};
    r.checks.push_back({"eta", format_eta(exp), format_eta(got), exp == got});
  }
  if (x.homology) {
    const std::string got = format_homology(f.homology);
    r.checks.push_back({"homology", *x.homology, got, parse_homology(*x.homology) == f.homology});
  }
  // Orbit count of the cusp groups on the single coset of the whole group.
  int cusps = 0;
  if (!e.presentation.peripheral().empty()) {
    SubgroupClass whole{std::make_shared<const GroupPresentation>(e.presentation),
                        CosetTable(e.presentation.generator_count(), 1,
                                   std::vector<int>(static_cast<std::size_t>(2 * e.presentation.generator_count()), 0)),
                        {}};
    cusps = cusp_count(whole);
  }
  if (x.cusps) {
    r.checks.push_back({"cusps", std::to_string(*x.cusps), std::to_string(cusps), *x.cusps == cusps});
  }
  if (x.reported_cusps) {
    r.checks.push_back({"reported_cusps", std::to_string(*x.reported_cusps), std::to_string(cusps),
                        *x.reported_cusps == cusps});
  }
  if (x.order) {
    r.checks.push_back({"order", std::to_string(*x.order),
                        f.order ? std::to_string(*f.order) : std::string("unknown"),
                        f.order == x.order});
  }
  return r;
}

}  // namespace bianchi

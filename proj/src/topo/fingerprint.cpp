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

#include "bianchi/fingerprint.hpp"

#include <algorithm>

#include "bianchi/errors.hpp"
#include "bianchi/homology.hpp"
#include "bianchi/todd_coxeter.hpp"

namespace bianchi {

std::string format_eta(const SignatureVector& eta) {
  std::string out = "[";
  for (std::size_t i = 0; i < eta.counts.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(eta.counts[i]);
  }
  return out + "]";
}

InvariantFingerprint fingerprint(const GroupPresentation& p, int depth,
                                 const FingerprintOptions& options) {
  InvariantFingerprint f;
  f.depth = depth;
  auto shared = std::make_shared<const GroupPresentation>(p);
  try {
    const LowIndexResult r = low_index_classes(shared, std::max(depth, 1), options.search);
    f.eta_depth = std::max(depth, 1);
    f.eta = eta_from_classes(r, depth);
  } catch (const BudgetExhausted& e) {
    f.eta_depth = e.partial().complete_through;
    f.eta = eta_from_classes(e.partial(), f.eta_depth);
  }
  f.homology = abelianization(p);
  f.cusps = p.cusp_count();
  f.order = group_order(p, options.max_cosets);
  return f;
}

bool MatchReport::consistent() const {
  return std::all_of(fields.begin(), fields.end(),
                     [](const FieldComparison& c) { return c.match; });
}

MatchReport compare_fingerprints(const InvariantFingerprint& computed,
                                 const InvariantFingerprint& expected,
                                 std::string target) {
  MatchReport r;
  r.target = std::move(target);
  r.computed = computed;
  r.expected = expected;
  const int known = std::min(computed.eta_depth, expected.eta_depth);
  r.partial = known < std::max(computed.depth, expected.depth);
  SignatureVector a;
  SignatureVector b;
  for (int d = 2; d <= known; ++d) {
    a.counts.push_back(computed.eta.counts[static_cast<std::size_t>(d - 2)]);
    b.counts.push_back(expected.eta.counts[static_cast<std::size_t>(d - 2)]);
  }
  r.fields.push_back({"eta", format_eta(b), format_eta(a), a == b});
  r.fields.push_back({"homology", format_homology(expected.homology),
                      format_homology(computed.homology),
                      expected.homology == computed.homology});
  r.fields.push_back({"cusps", std::to_string(expected.cusps),
                      std::to_string(computed.cusps), expected.cusps == computed.cusps});
  if (computed.order || expected.order) {
    auto show = [](const std::optional<std::uint64_t>& o) {
      return o ? std::to_string(*o) : std::string("unknown");
    };
    r.fields.push_back({"order", show(expected.order), show(computed.order),
                        computed.order == expected.order});
  }
  return r;
}

MatchReport invariants_match(const GroupPresentation& p, const CensusEntry& target,
                             int depth, const FingerprintOptions& options) {
  if (depth < 2) throw InputError("matching depth must be at least 2");
  return compare_fingerprints(fingerprint(p, depth, options),
                              fingerprint(target.presentation, depth, options),
                              target.name);
}

}  // namespace bianchi

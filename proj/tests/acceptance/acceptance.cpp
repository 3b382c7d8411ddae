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

// Acceptance suite: prints one PASS/FAIL line per criterion on stdout and
// details on stderr. Expected values are the published ones, written out
// here rather than read from the data directory.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "bianchi/census.hpp"
#include "bianchi/chain.hpp"
#include "bianchi/dehn.hpp"
#include "bianchi/fiducial.hpp"
#include "bianchi/fingerprint.hpp"
#include "bianchi/homology.hpp"
#include "bianchi/low_index.hpp"
#include "bianchi/mic.hpp"
#include "bianchi/reidemeister_schreier.hpp"
#include "bianchi/smith.hpp"
#include "bianchi/todd_coxeter.hpp"
#include "oracles.hpp"

using namespace bianchi;

namespace {

using Eta = std::vector<std::uint64_t>;

const Census& census() {
  static const Census c = load_census(BIANCHI_TEST_CENSUS);
  return c;
}

std::shared_ptr<const GroupPresentation> group(const std::string& name) {
  return std::make_shared<const GroupPresentation>(find_entry(census(), name).presentation);
}

std::string show(const Eta& e) { return format_eta(SignatureVector{e}); }

std::vector<SubgroupClass> annotated(const std::string& name, int index) {
  const auto p = group(name);
  LowIndexResult r = low_index_classes(p, index);
  std::vector<SubgroupClass> out;
  for (auto& s : r.classes) {
    if (s.index() != index) continue;
    annotate(s, p->torsion().empty());
    out.push_back(std::move(s));
  }
  return out;
}

std::string triple(const SubgroupClass& s) {
  return std::string(to_string(*s.tags.covering_type)) + ": " + format_homology(*s.tags.homology) +
         " / " + std::to_string(*s.tags.cusps) + " cusps";
}

struct Outcome {
  bool pass = true;
  std::string summary;
};

// ---- 1 ----------------------------------------------------------------------

Outcome eta_reproduction() {
  Outcome o;
  std::ostringstream s;
  auto check = [&](const std::string& name, const Eta& got, const Eta& want) {
    const bool ok = got == want;
    o.pass = o.pass && ok;
    std::cerr << "  [1] " << name << ": computed " << show(got) << ", published " << show(want)
              << (ok ? "" : "  <-- differs") << '\n';
    if (!ok) s << name << " " << show(got) << " != " << show(want) << "; ";
  };
  check("L8n7", eta_signature(group("L8n7"), 4).counts, {63, 794, 23753});
  check("L10n113", eta_signature(group("L10n113"), 4).counts, {31, 176, 1987});
  check("L12n2256", eta_signature(group("L12n2256"), 3).counts, {63, 580});

  // Covers built in-pipeline; the first class with the published list wins.
  auto cover = [&](const std::string& label, const std::string& source, int index,
                   const std::string& homology, int cusps, int depth, const Eta& want) {
    Eta first;
    for (const auto& c : annotated(source, index)) {
      if (format_homology(*c.tags.homology) != homology || *c.tags.cusps != cusps) continue;
      const Eta got = eta_signature(std::make_shared<const GroupPresentation>(subgroup_presentation(c)), depth).counts;
      if (first.empty()) first = got;
      if (got == want) {
        first = got;
        break;
      }
    }
    check(label, first, want);
  };
  cover("otet16_00025", "L6a2", 4, "1^{+4}", 4, 4, {15, 70, 642});
  cover("L6a5 index-4 cover", "L6a5", 4, "1/2+1^{+4}", 4, 3, {31, 174});
  o.summary = o.pass ? "all five lists reproduce" : s.str();
  return o;
}

// ---- 2 ----------------------------------------------------------------------

Outcome table2() {
  const std::map<int, std::set<std::string>> published{
      {2, {"cyc: 1^{+2} / 2 cusps", "cyc: 1/5+1^{+2} / 2 cusps"}},
      {3, {"cyc: 1^{+4} / 4 cusps", "cyc: 1/3^{+2}+1^{+2} / 4 cusps"}},
      {4, {"cyc: 1^{+3} / 2 cusps", "cyc: 1/3^{+2}+1^{+2} / 2 cusps", "cyc: 1/5+1^{+2} / 2 cusps",
           "irr: 1^{+4} / 4 cusps", "reg: 1/5+1^{+2} / 2 cusps"}},
  };
  Outcome o;
  std::ostringstream s;
  for (const auto& [d, rows] : published) {
    std::set<std::string> got;
    for (const auto& c : annotated("L6a2", d)) got.insert(triple(c));
    const bool ok = got == rows;
    o.pass = o.pass && ok;
    for (const auto& t : got) {
      std::cerr << "  [2] d=" << d << " computed " << t << (rows.contains(t) ? "" : "  <-- not in table")
                << '\n';
    }
    for (const auto& t : rows) {
      if (!got.contains(t)) std::cerr << "  [2] d=" << d << " table row missing: " << t << '\n';
    }
    if (!ok) s << "d=" << d << " differs; ";
  }
  o.summary = o.pass ? "d = 2..4 rows match" : s.str();
  return o;
}

// ---- 3 ----------------------------------------------------------------------

Outcome table1_k7() {
  const auto p = group("Bianchi-7");
  LowIndexOptions tf;
  tf.torsion_free_only = true;
  LowIndexResult r = low_index_classes(p, 6, tf);
  const InvariantFingerprint l6a1 = fingerprint(*group("L6a1"), 3);
  const InvariantFingerprint l6a5 = fingerprint(*group("L6a5"), 3);
  int n1 = 0;
  int n5 = 0;
  int other = 0;
  for (auto& s : r.classes) {
    if (s.index() != 6) continue;
    annotate(s, false);
    if (!*s.tags.torsion_free) continue;
    InvariantFingerprint f = fingerprint(subgroup_presentation(s), 3);
    f.cusps = *s.tags.cusps;
    const bool is1 = compare_fingerprints(f, l6a1, "L6a1").consistent();
    const bool is5 = compare_fingerprints(f, l6a5, "L6a5").consistent();
    n1 += is1 ? 1 : 0;
    n5 += is5 ? 1 : 0;
    other += (is1 || is5) ? 0 : 1;
    std::cerr << "  [3] class: " << format_homology(f.homology) << ", " << f.cusps << " cusps, eta "
              << format_eta(f.eta) << (is1 ? "  = L6a1" : is5 ? "  = L6a5" : "  <-- neither") << '\n';
  }
  Outcome o;
  o.pass = n1 > 0 && n5 > 0 && other == 0;
  o.summary = std::to_string(n1) + " L6a1, " + std::to_string(n5) + " L6a5, " +
              std::to_string(other) + " other torsion-free classes";
  return o;
}

// ---- 4 ----------------------------------------------------------------------

Outcome chain() {
  const auto start = std::chrono::steady_clock::now();
  const ChainReport r = chain_walk(census(), load_chain_spec(BIANCHI_TEST_DATA "/chain.json"), 3);
  Outcome o;
  int consistent = 0;
  for (const auto& s : r.steps) {
    consistent += s.consistent() ? 1 : 0;
    std::cerr << "  [4] " << s.step.from << " -> " << s.step.to << ": "
              << (s.consistent() ? "consistent" : "inconsistent") << '\n';
  }
  const GroupPresentation filled =
      dehn_fill(find_entry(census(), "K4a1"), 0, FillingSlope::make(1, 1));
  const std::string h = format_homology(abelianization(filled));
  const auto order = group_order(filled, 1000000);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "  [4] K4a1(1,1): homology " << h << ", order "
            << (order ? std::to_string(*order) : "not found within 10^6 cosets") << ", " << secs
            << " s\n";
  o.pass = r.consistent() && h == "0" && order == std::optional<std::uint64_t>(120) && secs <= 900;
  o.summary = std::to_string(consistent) + "/" + std::to_string(r.steps.size()) +
              " steps consistent; K4a1(1,1) homology " + h + ", order " +
              (order ? std::to_string(*order) : "unknown (coset limit)");
  return o;
}

// ---- 5 ----------------------------------------------------------------------

Outcome mic_pipeline() {
  bool sic_ok = false;
  for (const auto& c : annotated("L6a5", 3)) {
    if (format_homology(*c.tags.homology) != "1^{+5}" || *c.tags.cusps != 5) continue;
    const auto spec = PauliGroupSpec::default_for(3);
    FiducialOptions fo;
    fo.filter = spec;
    for (const auto& f : fiducials_from_perm_rep(permutation_rep(c.table), fo)) {
      const MicReport m = mic_report(f, spec);
      const bool angle = m.angle_classes.size() == 1 && std::abs(m.angle_classes[0].value - 0.5) <= 1e-10;
      if (m.is_sic && angle && m.gram_rank == 9 &&
          m.geometry.recognized_as == Recognition::hesse_configuration &&
          m.geometry.point_count == 9 && m.geometry.line_count == 12) {
        sic_ok = true;
      }
    }
  }
  bool gq_ok = false;
  for (const auto& c : annotated("L6a5", 4)) {
    if (format_homology(*c.tags.homology) != "1/2+1^{+4}") continue;
    const auto spec = PauliGroupSpec::make(4, PauliFlavor::multi_qubit);
    FiducialOptions fo;
    fo.filter = spec;
    for (const auto& f : fiducials_from_perm_rep(permutation_rep(c.table), fo)) {
      const MicReport m = mic_report(f, spec);
      const auto& g = m.geometry;
      if (m.gram_rank == 16 && !m.is_sic && g.recognized_as == Recognition::gq22 &&
          g.point_count == 15 && g.line_count == 15 && g.points_per_line == 3) {
        gq_ok = true;
      }
    }
  }
  Outcome o;
  o.pass = sic_ok && gq_ok;
  o.summary = std::string("qutrit Hesse SIC ") + (sic_ok ? "found" : "missing") +
              ", two-qubit GQ(2,2) MIC " + (gq_ok ? "found" : "missing");
  return o;
}

// ---- 6 ----------------------------------------------------------------------

Outcome quantum_properties() {
  Outcome o;
  int fiducials = 0;
  double worst_resolution = 0;
  double worst_born = 0;
  for (int d = 2; d <= 6; ++d) {
    const auto spec = PauliGroupSpec::default_for(d);
    State zero = State::Zero(d);
    zero(0) = 1;
    if (gram_rank(pauli_orbit(zero, spec)) != d) o.pass = false;
    const Operator mixed = Operator::Identity(d, d) / static_cast<double>(d);
    for (const auto& c : annotated("L6a2", d)) {
      for (const auto& f : fiducials_from_perm_rep(permutation_rep(c.table))) {
        ++fiducials;
        const auto orbit = pauli_orbit(f.amplitudes, spec);
        worst_resolution = std::max(worst_resolution, resolution_defect(orbit));
        for (double p : povm_probabilities(mixed, orbit)) {
          worst_born = std::max(worst_born, std::abs(p - 1.0 / (d * d)));
        }
      }
    }
  }
  const std::size_t catalog = stabilizer_catalog(PauliGroupSpec::default_for(3)).size();
  o.pass = o.pass && worst_resolution <= 1e-10 && worst_born <= 1e-12 && catalog == 12;
  std::ostringstream s;
  s << fiducials << " fiducials, max |sum P - dI|/d " << worst_resolution << ", max Born error "
    << worst_born << ", qutrit catalog " << catalog;
  o.summary = s.str();
  return o;
}

// ---- 7 ----------------------------------------------------------------------

Outcome oracle_equivalence() {
  Outcome o;
  int groups = 0;
  for (const auto& e : census()) {
    if (e.presentation.generator_count() > 2) continue;
    ++groups;
    const auto p = std::make_shared<const GroupPresentation>(e.presentation);
    const Eta got = eta_signature(p, 3).counts;
    const Eta want = oracle::transitive_tuple_eta(e.presentation, 3);
    if (got != want) {
      o.pass = false;
      std::cerr << "  [7] " << e.name << ": " << show(got) << " vs oracle " << show(want) << '\n';
    }
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  int snf_mismatch = 0;
  for (int trial = 0; trial < 200; ++trial) {
    oracle::Matrix m(4, std::vector<long long>(4));
    for (auto& row : m) {
      for (auto& x : row) x = entry(rng);
    }
    const AbelianGroupType got = cokernel(IntegerMatrix::from_rows(m));
    const oracle::CokernelType want = oracle::determinantal_cokernel(m, 4);
    std::vector<std::uint64_t> torsion(want.torsion.begin(), want.torsion.end());
    if (got.free_rank != want.free_rank || got.torsion != torsion) ++snf_mismatch;
  }
  o.pass = o.pass && snf_mismatch == 0;
  o.summary = "eta on " + std::to_string(groups) + " groups, " +
              std::to_string(200 - snf_mismatch) + "/200 Smith forms agree";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"eta-signature reproduction", eta_reproduction},
      {"L6a2 covering table, d = 2..4", table2},
      {"k = -7 index-6 torsion-free classes", table1_k7},
      {"Dehn filling chain to order 120", chain},
      {"MIC pipeline end to end", mic_pipeline},
      {"quantum property suite", quantum_properties},
      {"oracle equivalence", oracle_equivalence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first
              << " -- " << o.summary << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

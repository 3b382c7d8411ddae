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

#include "bianchi/reproduce.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <tuple>

#include "bianchi/chain.hpp"
#include "bianchi/dehn.hpp"
#include "bianchi/errors.hpp"
#include "bianchi/fiducial.hpp"
#include "bianchi/fingerprint.hpp"
#include "bianchi/homology.hpp"
#include "bianchi/json_out.hpp"
#include "bianchi/mic.hpp"
#include "bianchi/reidemeister_schreier.hpp"
#include "bianchi/todd_coxeter.hpp"

namespace bianchi {

using nlohmann::json;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::skipped_budget: return "skipped-budget";
  }
  return "mismatch";
}

bool ReproductionReport::any_skipped() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](const ReproductionRow& r) { return r.verdict == Verdict::skipped_budget; });
}

bool ReproductionReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ReproductionRow& r) { return r.verdict == Verdict::match; });
}

json to_json(const ReproductionReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"label", row.label},
                    {"expected", row.expected},
                    {"computed", row.computed},
                    {"verdict", std::string(to_string(row.verdict))},
                    {"watermark", row.watermark}});
  }
  std::map<std::string, int> tally;
  for (const auto& row : r.rows) ++tally[std::string(to_string(row.verdict))];
  return {{"target", r.target}, {"summary", tally}, {"rows", std::move(rows)}};
}

namespace {

Verdict verdict_of(bool ok) { return ok ? Verdict::match : Verdict::mismatch; }

bool parent_torsion_free(const GroupPresentation& p) { return p.torsion().empty(); }

std::string class_key(const SubgroupClass& s) {
  return std::string(to_string(*s.tags.covering_type)) + " " + format_homology(*s.tags.homology) +
         " " + std::to_string(*s.tags.cusps);
}

ReproductionRow skipped(std::string label, json expected, const std::string& reason) {
  return {std::move(label), std::move(expected), json(), Verdict::skipped_budget,
          {{"reason", reason}}};
}

struct EtaOutcome {
  SignatureVector eta;
  int complete_through = 0;
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

EtaOutcome eta_within_budget(const GroupPresentation& p, int depth, const LowIndexOptions& search) {
  EtaOutcome out;
  auto shared = std::make_shared<const GroupPresentation>(p);
  try {
    const LowIndexResult r = low_index_classes(shared, depth, search);
    out.eta = eta_from_classes(r, depth);
    out.complete_through = depth;
    out.nodes = r.nodes;
  } catch (const BudgetExhausted& e) {
    out.exhausted = true;
    out.complete_through = e.partial().complete_through;
    out.eta = eta_from_classes(e.partial(), out.complete_through);
    out.nodes = e.partial().nodes;
  }
  return out;
}

// Compares the quoted prefix eta[0..] (indices 2..) up to depth.
ReproductionRow eta_row(std::string label, const std::vector<std::uint64_t>& quoted,
                        const EtaOutcome& got, int depth) {
  const int quoted_depth = static_cast<int>(quoted.size()) + 1;
  const int want = std::min(depth, quoted_depth);
  std::vector<std::uint64_t> expected(quoted.begin(), quoted.begin() + std::max(0, want - 1));
  ReproductionRow row{std::move(label), expected, got.eta.counts, Verdict::match,
                      {{"depth_requested", want},
                       {"depth_reached", std::min(got.complete_through, want)},
                       {"budget_exhausted", got.exhausted},
                       {"nodes", got.nodes}}};
  const int known = std::min(got.complete_through, want);
  for (int d = 2; d <= known; ++d) {
    const auto i = static_cast<std::size_t>(d - 2);
    if (got.eta.counts[i] != expected[i]) row.verdict = Verdict::mismatch;
  }
  if (row.verdict == Verdict::match && known < want) row.verdict = Verdict::skipped_budget;
  return row;
}

std::vector<SubgroupClass> annotated_classes(const GroupPresentation& p, int d_max,
                                             const LowIndexOptions& search) {
  auto shared = std::make_shared<const GroupPresentation>(p);
  LowIndexResult r = low_index_classes(shared, d_max, search);
  for (auto& s : r.classes) annotate(s, parent_torsion_free(p));
  return std::move(r.classes);
}

FingerprintOptions fp_options(const ReproduceOptions& o) {
  FingerprintOptions f;
  f.search = o.search;
  f.max_cosets = std::min<std::size_t>(o.max_cosets, 100000);
  return f;
}

int eta_depth_for(const ReproduceOptions& o, int fallback) {
  return o.depth ? *o.depth : fallback;
}

// ---- table 1 --------------------------------------------------------------

void table1(const ReproduceOptions& o, ReproductionReport& report) {
  const int depth = eta_depth_for(o, 3);
  const FingerprintOptions fopts = fp_options(o);
  for (const json& block : o.targets.at("table1")) {
    const std::string group = block.at("group");
    const int index = block.at("index");
    const int k = block.at("k");
    const std::string where = "k=" + std::to_string(k) + " index " + std::to_string(index);
    auto expected_of = [&](const json& row) {
      return json{{"k", k}, {"index", index}, {"name", row.at("name")}, {"cusps", row.at("cusps")}};
    };
    std::string reason;
    if (block.value("stretch", false) && !o.stretch) reason = "stretch row; pass --stretch";
    if (index > o.max_index) reason = "index above --max-index";
    if (!reason.empty()) {
      for (const json& row : block.at("rows")) {
        report.rows.push_back(skipped(where + " " + row.at("name").get<std::string>(),
                                      expected_of(row), reason));
      }
      report.rows.push_back(skipped(where + " unlisted classes", json::array(), reason));
      continue;
    }

    const CensusEntry& parent = find_entry(o.census, group);
    LowIndexOptions search = o.search;
    search.torsion_free_only = true;
    std::vector<SubgroupClass> classes;
    try {
      for (auto& s : annotated_classes(parent.presentation, index, search)) {
        if (s.index() == index && s.tags.torsion_free.value_or(false)) classes.push_back(std::move(s));
      }
    } catch (const BudgetExhausted& e) {
      for (const json& row : block.at("rows")) {
        ReproductionRow r = skipped(where + " " + row.at("name").get<std::string>(),
                                    expected_of(row), "search budget exhausted");
        r.watermark["complete_through"] = e.partial().complete_through;
        report.rows.push_back(std::move(r));
      }
      continue;
    }

    std::vector<InvariantFingerprint> prints;
    for (const auto& s : classes) {
      InvariantFingerprint f = fingerprint(subgroup_presentation(s), depth, fopts);
      // Cusps with finite rotations are not lifted into the rewritten
      // presentation, so the orbit count stands in for them.
      f.cusps = *s.tags.cusps;
      prints.push_back(std::move(f));
    }

    std::vector<bool> claimed(classes.size(), false);
    for (const json& row : block.at("rows")) {
      const std::string name = row.at("name");
      const int cusps = row.at("cusps");
      const CensusEntry& target = find_entry(o.census, name);
      const InvariantFingerprint want = fingerprint(target.presentation, depth, fopts);
      json ids = json::array();
      json cusp_counts = json::array();
      bool partial = false;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const MatchReport m = compare_fingerprints(prints[i], want, name);
        partial = partial || m.partial;
        if (!m.consistent()) continue;
        claimed[i] = true;
        ids.push_back(i);
        cusp_counts.push_back(prints[i].cusps);
      }
      const bool found = !ids.empty();
      const bool cusps_ok = found && std::all_of(cusp_counts.begin(), cusp_counts.end(),
                                                 [&](const json& c) { return c == cusps; });
      ReproductionRow r{where + " " + name, expected_of(row),
                        {{"consistent_classes", ids}, {"cusps", cusp_counts},
                         {"fingerprint", to_json(want)}},
                        verdict_of(found && cusps_ok),
                        {{"eta_depth", depth}, {"torsion_free_classes", classes.size()}}};
      if (!found && partial) r.verdict = Verdict::skipped_budget;
      report.rows.push_back(std::move(r));
    }

    json unlisted = json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (claimed[i]) continue;
      json c = class_to_json(classes[i], static_cast<int>(i));
      c.erase("permutations");
      c["eta"] = prints[i].eta.counts;
      unlisted.push_back(std::move(c));
    }
    const bool none = unlisted.empty();
    report.rows.push_back({where + " unlisted classes", json::array(), std::move(unlisted),
                           verdict_of(none),
                           {{"eta_depth", depth}, {"torsion_free_classes", classes.size()}}});
  }
}

// ---- table 2 --------------------------------------------------------------

void table2(const ReproduceOptions& o, ReproductionReport& report) {
  const json& t = o.targets.at("table2");
  const std::string group = t.at("group");
  const int stretch_from = t.at("stretch_from");
  int d_max = 0;
  for (const json& row : t.at("rows")) d_max = std::max(d_max, row.at("d").get<int>());
  int limit = std::min(d_max, o.max_index);
  if (!o.stretch) limit = std::min(limit, stretch_from - 1);

  const CensusEntry& parent = find_entry(o.census, group);
  std::vector<SubgroupClass> classes;
  int complete = limit;
  try {
    classes = annotated_classes(parent.presentation, limit, o.search);
  } catch (const BudgetExhausted& e) {
    complete = e.partial().complete_through;
    for (const auto& s : e.partial().classes) {
      if (s.index() > complete) continue;
      SubgroupClass c = s;
      annotate(c, parent_torsion_free(parent.presentation));
      classes.push_back(std::move(c));
    }
  }

  for (int d = 2; d <= d_max; ++d) {
    const std::string where = "d=" + std::to_string(d);
    std::map<std::string, int> computed;
    for (const auto& s : classes) {
      if (s.index() == d) ++computed[class_key(s)];
    }
    std::set<std::string> listed;
    for (const json& row : t.at("rows")) {
      if (row.at("d") != d) continue;
      const std::string key = row.at("type").get<std::string>() + " " +
                              row.at("homology").get<std::string>() + " " +
                              std::to_string(row.at("cusps").get<int>());
      listed.insert(key);
      json expected = row;
      if (d > limit || d > complete) {
        report.rows.push_back(skipped(where + " " + key, expected,
                                      d > limit ? "stretch or --max-index" : "search budget exhausted"));
        continue;
      }
      const auto it = computed.find(key);
      const int count = it == computed.end() ? 0 : it->second;
      report.rows.push_back({where + " " + key, expected, {{"classes", count}},
                             verdict_of(count > 0), {{"index", d}}});
    }
    if (d > limit || d > complete) continue;
    json extra = json::array();
    for (const auto& [key, count] : computed) {
      if (!listed.contains(key)) extra.push_back({{"class", key}, {"count", count}});
    }
    const bool none = extra.empty();
    report.rows.push_back({where + " unlisted", json::array(), std::move(extra), verdict_of(none),
                           {{"index", d}}});
  }
}

// ---- table 3 --------------------------------------------------------------

// Summarizes the MICs of one class; *ok reports whether they realize `uqc`.
json mic_summary(const SubgroupClass& s, const std::string& uqc, bool* ok) {
  *ok = false;
  const PauliGroupSpec spec = PauliGroupSpec::default_for(s.index());
  FiducialOptions fo;
  fo.filter = spec;
  const auto fids =
      fiducials_from_perm_rep(permutation_rep(s.table), fo, s.parent->generator_names());
  int mics = 0;
  int sics = 0;
  std::map<std::string, int> geometry;
  for (const auto& f : fids) {
    const MicReport m = mic_report(f, spec);
    if (m.is_mic) {
      ++mics;
      ++geometry[std::string(to_string(m.geometry.recognized_as))];
    }
    if (m.is_sic) ++sics;
    if (uqc == "Hesse SIC" && m.is_sic &&
        m.geometry.recognized_as == Recognition::hesse_configuration) {
      *ok = true;
    }
    if (uqc == "2QB MIC" && m.is_mic && spec.flavor == PauliFlavor::multi_qubit) *ok = true;
    if (uqc != "Hesse SIC" && uqc != "2QB MIC" && m.is_mic) *ok = true;
  }
  return {{"fiducials", fids.size()}, {"mics", mics}, {"sics", sics}, {"geometry", geometry}};
}

void table3(const ReproduceOptions& o, ReproductionReport& report) {
  for (const json& row : o.targets.at("table3")) {
    const std::string source = row.at("source");
    const int index = row.at("index");
    const std::string label = source + " index " + std::to_string(index) + " " +
                              row.at("type").get<std::string>() + ": " +
                              row.at("homology").get<std::string>();
    if (index > o.max_index) {
      report.rows.push_back(skipped(label, row, "index above --max-index"));
      continue;
    }
    const CensusEntry& parent = find_entry(o.census, source);
    std::vector<SubgroupClass> covers;
    std::vector<SubgroupClass> same_homology;
    try {
      for (auto& s : annotated_classes(parent.presentation, index, o.search)) {
        if (s.index() != index) continue;
        if (to_string(*s.tags.covering_type) != row.at("type").get<std::string>() ||
            format_homology(*s.tags.homology) != row.at("homology").get<std::string>()) {
          continue;
        }
        if (*s.tags.cusps == row.at("cusps").get<int>()) {
          covers.push_back(s);
        } else {
          same_homology.push_back(std::move(s));
        }
      }
    } catch (const BudgetExhausted&) {
      report.rows.push_back(skipped(label, row, "search budget exhausted"));
      continue;
    }

    json computed{{"classes", covers.size()}};
    if (!same_homology.empty()) {
      json other = json::array();
      for (const auto& s : same_homology) other.push_back(*s.tags.cusps);
      computed["same_homology_other_cusps"] = std::move(other);
    }
    json watermark{{"index", index}};
    // A row is realized when one class carries both the quoted MIC and the
    // quoted eta prefix; classes are tried in canonical order.
    std::vector<std::uint64_t> quoted;
    int depth = 0;
    if (row.contains("eta")) {
      quoted = row.at("eta").get<std::vector<std::uint64_t>>();
      depth = eta_depth_for(o, o.stretch ? static_cast<int>(quoted.size()) + 1 : 3);
    }
    json uqc = json::array();
    json etas = json::array();
    Verdict verdict = Verdict::mismatch;
    for (std::size_t i = 0; i < covers.size() && verdict != Verdict::match; ++i) {
      bool mic_ok = false;
      uqc.push_back(mic_summary(covers[i], row.at("uqc"), &mic_ok));
      if (!mic_ok) continue;
      if (quoted.empty()) {
        verdict = Verdict::match;
        continue;
      }
      const EtaOutcome got = eta_within_budget(subgroup_presentation(covers[i]), depth, o.search);
      const ReproductionRow er = eta_row(label, quoted, got, depth);
      etas.push_back({{"class", i}, {"eta", er.computed}});
      watermark["eta"] = er.watermark;
      if (er.verdict == Verdict::match || verdict == Verdict::mismatch) verdict = er.verdict;
    }
    computed["uqc"] = std::move(uqc);
    if (!quoted.empty()) computed["eta"] = std::move(etas);
    report.rows.push_back({label, row, std::move(computed), verdict, std::move(watermark)});
  }
}

// ---- eta ------------------------------------------------------------------

void eta(const ReproduceOptions& o, ReproductionReport& report) {
  std::vector<json> targets;
  for (const json& t : o.targets.at("eta")) {
    if (!o.group || t.at("name") == *o.group || t.value("group", "") == *o.group) targets.push_back(t);
  }
  if (targets.empty() && o.group) {
    const CensusEntry& e = find_entry(o.census, *o.group);
    if (!e.expected || e.expected->eta.empty()) {
      throw InputError("no quoted eta list for '" + *o.group + "'");
    }
    targets.push_back({{"name", e.name}, {"group", e.name}, {"eta", e.expected->eta},
                       {"depth", static_cast<int>(e.expected->eta.size()) + 1}});
  }
  for (const json& t : targets) {
    const std::string name = t.at("name");
    const auto quoted = t.at("eta").get<std::vector<std::uint64_t>>();
    int depth = o.stretch ? static_cast<int>(quoted.size()) + 1 : t.at("depth").get<int>();
    depth = eta_depth_for(o, depth);
    if (t.contains("cover")) {
      const json& c = t.at("cover");
      const auto covers = find_covers(find_entry(o.census, c.at("source").get<std::string>()).presentation,
                                      c.at("index"), c.at("type").get<std::string>(),
                                      c.at("homology").get<std::string>(), c.at("cusps"), o.search);
      if (covers.empty()) {
        report.rows.push_back({name, quoted, json(), Verdict::mismatch,
                               {{"reason", "no class with the stated covering data"}}});
        continue;
      }
      // Conjugacy classes with equal covering data need not be isomorphic;
      // the first class reproducing the list stands for the manifold.
      ReproductionRow best;
      for (std::size_t i = 0; i < covers.size(); ++i) {
        ReproductionRow r = eta_row(name, quoted,
                                    eta_within_budget(subgroup_presentation(covers[i]), depth, o.search),
                                    depth);
        r.watermark["class"] = i;
        r.watermark["candidates"] = covers.size();
        if (i == 0 || r.verdict != Verdict::mismatch) best = std::move(r);
        if (best.verdict == Verdict::match) break;
      }
      report.rows.push_back(std::move(best));
      continue;
    }
    const GroupPresentation& p = find_entry(o.census, t.at("group").get<std::string>()).presentation;
    report.rows.push_back(eta_row(name, quoted, eta_within_budget(p, depth, o.search), depth));
  }
}

// ---- chain ----------------------------------------------------------------

void chain(const ReproduceOptions& o, ReproductionReport& report) {
  const json& c = o.targets.at("chain");
  const int depth = eta_depth_for(o, c.at("depth"));
  const auto steps = load_chain_spec(o.data_dir / c.at(o.stretch ? "stretch_spec" : "spec").get<std::string>());
  const FingerprintOptions fopts = fp_options(o);
  const ChainReport walk = chain_walk(o.census, steps, depth, fopts);
  const json walk_json = to_json(walk);
  for (std::size_t i = 0; i < walk.steps.size(); ++i) {
    const ChainStepReport& s = walk.steps[i];
    const json& sj = walk_json.at("steps")[i];
    const bool partial = std::any_of(s.attempts.begin(), s.attempts.end(),
                                     [](const CuspAttempt& a) { return a.match.partial; });
    Verdict v = verdict_of(s.consistent());
    if (!s.consistent() && partial) v = Verdict::skipped_budget;
    report.rows.push_back({s.step.from + " -> " + s.step.to,
                           {{"from", s.step.from}, {"to", s.step.to}, {"cusp", sj.at("cusp")},
                            {"slope", sj.at("slope")}, {"verdict", "consistent"}},
                           {{"matched_cusp", sj.at("matched_cusp")}, {"attempts", sj.at("attempts")}},
                           v,
                           {{"depth", depth}, {"partial", partial}}});
  }

  const json& term = c.at("terminal");
  const CensusEntry& start = find_entry(o.census, term.at("group").get<std::string>());
  const FillingSlope slope = FillingSlope::make(term.at("slope")[0], term.at("slope")[1]);
  const GroupPresentation filled = dehn_fill(start, term.at("cusp"), slope);
  const std::string label = start.name + "(" + std::to_string(slope.p) + "," +
                            std::to_string(slope.q) + ")";
  const std::string h = format_homology(abelianization(filled));
  report.rows.push_back({label + " homology", term.at("homology"), h,
                         verdict_of(h == term.at("homology").get<std::string>()), json::object()});
  const auto order = group_order(filled, o.max_cosets);
  ReproductionRow r{label + " order", term.at("order"), order ? json(*order) : json(),
                    Verdict::skipped_budget, {{"max_cosets", o.max_cosets}, {"overflowed", !order}}};
  if (order) r.verdict = verdict_of(*order == term.at("order").get<std::uint64_t>());
  report.rows.push_back(std::move(r));
}

}  // namespace

std::vector<SubgroupClass> find_covers(const GroupPresentation& source, int index,
                                       std::string_view type, std::string_view homology,
                                       int cusps, const LowIndexOptions& search) {
  std::vector<SubgroupClass> out;
  for (auto& s : annotated_classes(source, index, search)) {
    if (s.index() == index && to_string(*s.tags.covering_type) == type &&
        format_homology(*s.tags.homology) == homology && *s.tags.cusps == cusps) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

ReproductionReport reproduce(std::string_view target, const ReproduceOptions& options) {
  ReproductionReport report;
  report.target = std::string(target);
  if (target == "table1") {
    table1(options, report);
  } else if (target == "table2") {
    table2(options, report);
  } else if (target == "table3") {
    table3(options, report);
  } else if (target == "eta") {
    eta(options, report);
  } else if (target == "chain") {
    chain(options, report);
  } else {
    throw InputError("unknown reproduction target '" + std::string(target) + "'");
  }
  return report;
}

}  // namespace bianchi

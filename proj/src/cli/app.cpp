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

#include "bianchi/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bianchi/census.hpp"
#include "bianchi/census_validation.hpp"
#include "bianchi/chain.hpp"
#include "bianchi/dehn.hpp"
#include "bianchi/errors.hpp"
#include "bianchi/fiducial.hpp"
#include "bianchi/homology.hpp"
#include "bianchi/json_out.hpp"
#include "bianchi/low_index.hpp"
#include "bianchi/mic.hpp"
#include "bianchi/report_json.hpp"
#include "bianchi/reproduce.hpp"
#include "bianchi/todd_coxeter.hpp"

namespace bianchi {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitBudget = 1;
constexpr int kExitInput = 2;

struct Globals {
  std::string census_path;
  std::string format = "json";
  bool deterministic = false;
  std::size_t max_cosets = 1000000;
  double max_seconds = 600;
  std::optional<std::uint64_t> max_nodes;
  int max_index = 12;
  bool stretch = false;
  int jobs = 1;
};

struct ClassQuery {
  std::string group;
  int index = 0;
  std::optional<int> id;
  bool torsion_free = false;
};

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream os;
  os << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

LowIndexOptions search_options(const Globals& g) {
  LowIndexOptions o;
  o.jobs = g.jobs;
  o.budget.max_seconds = g.max_seconds;
  o.budget.max_nodes = g.max_nodes;
  return o;
}

std::string census_path(const Globals& g) {
  if (!g.census_path.empty()) return g.census_path;
  if (const char* env = std::getenv("BIANCHI_CENSUS"); env != nullptr && *env != '\0') return env;
  return BIANCHI_CENSUS_DEFAULT;
}

void emit(std::ostream& out, const Globals& g, json doc) {
  if (!g.deterministic) doc["generated_at"] = timestamp();
  if (g.format == "text") {
    out << render_text(doc);
  } else {
    out << doc.dump(2) << '\n';
  }
}

struct Listing {
  std::vector<SubgroupClass> classes;
  int complete_through = 0;
  bool exhausted = false;
};

// Classes of exactly the queried index, annotated, in canonical order.
Listing list_classes(const CensusEntry& e, const ClassQuery& q, const Globals& g) {
  if (q.index < 1) throw InputError("--index must be at least 1");
  LowIndexOptions o = search_options(g);
  o.torsion_free_only = q.torsion_free;
  auto parent = std::make_shared<const GroupPresentation>(e.presentation);
  Listing l;
  LowIndexResult r;
  try {
    r = low_index_classes(parent, q.index, o);
    l.complete_through = q.index;
  } catch (const BudgetExhausted& ex) {
    r = ex.partial();
    l.exhausted = true;
    l.complete_through = r.complete_through;
  }
  const bool tf_parent = e.presentation.torsion().empty();
  for (auto& s : r.classes) {
    if (s.index() != q.index) continue;
    annotate(s, tf_parent);
    l.classes.push_back(std::move(s));
  }
  return l;
}

const SubgroupClass& pick(const Listing& l, const ClassQuery& q) {
  if (l.exhausted) throw InputError("class listing incomplete under the current budget");
  const int n = static_cast<int>(l.classes.size());
  if (!q.id || *q.id < 0 || *q.id >= n) {
    throw InputError("--class must be in [0, " + std::to_string(n) + ") for index " +
                     std::to_string(q.index));
  }
  return l.classes[static_cast<std::size_t>(*q.id)];
}

void add_class_query(CLI::App* sub, ClassQuery& q, bool index_required) {
  sub->add_option("--group", q.group, "census entry name")->required();
  auto* idx = sub->add_option("--index", q.index, "subgroup index");
  if (index_required) idx->required();
  sub->add_option("--class", q.id, "class id within the index listing");
  sub->add_flag("--torsion-free", q.torsion_free, "only torsion-free classes");
}

FillingSlope parse_slope(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("slope must be p,q");
  try {
    return FillingSlope::make(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
  } catch (const std::logic_error&) {
    throw InputError("slope must be two integers p,q");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Bianchi subgroups, 3-manifold fingerprints and MIC-POVMs"};
  app.require_subcommand(1);
  app.add_option("--census", g.census_path, "census JSON (default: $BIANCHI_CENSUS or bundled)");
  app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--deterministic", g.deterministic, "omit the timestamp field");
  app.add_option("--max-cosets", g.max_cosets, "coset limit for group orders")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-seconds", g.max_seconds, "time limit per subgroup search")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-nodes", g.max_nodes, "node limit per subgroup search");
  auto* max_index = app.add_option("--max-index", g.max_index, "largest index searched")
                        ->check(CLI::PositiveNumber);
  app.add_flag("--stretch", g.stretch, "include hours-scale rows");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);

  ClassQuery q;
  auto* subgroups = app.add_subcommand("subgroups", "list subgroup classes of one index");
  add_class_query(subgroups, q, true);

  std::string sig_group;
  auto* signature = app.add_subcommand("signature", "eta signature up to --max-index");
  signature->add_option("--group", sig_group, "census entry name")->required();

  auto* homology = app.add_subcommand("homology", "first homology of a group or class");
  add_class_query(homology, q, false);
  auto* cusps = app.add_subcommand("cusps", "cusp count of a group or class");
  add_class_query(cusps, q, false);

  std::string fill_group;
  int fill_cusp = 0;
  std::string fill_slope;
  std::optional<std::string> fill_target;
  int fill_depth = 3;
  bool fill_order = false;
  auto* fill = app.add_subcommand("fill", "Dehn filling of one cusp");
  fill->add_option("--group", fill_group, "census entry name")->required();
  fill->add_option("--cusp", fill_cusp, "cusp number (0-based)");
  fill->add_option("--slope", fill_slope, "p,q (write --slope=-1,1 for negative p)")->required();
  fill->add_option("--target", fill_target, "census entry to compare against");
  fill->add_option("--depth", fill_depth, "eta depth for --target");
  fill->add_flag("--order", fill_order, "enumerate the group order");

  std::string chain_spec = std::string(BIANCHI_DATA_DIR) + "/chain.json";
  int chain_depth = 3;
  auto* chain = app.add_subcommand("chain", "verify a Dehn filling chain");
  chain->add_option("--spec", chain_spec, "chain JSON");
  chain->add_option("--depth", chain_depth, "eta depth for every step");

  std::string flavor = "auto";
  int word_length = 2;
  bool unfiltered = false;
  auto* mic = app.add_subcommand("mic", "MIC reports for the fiducials of one class");
  add_class_query(mic, q, true);
  mic->add_option("--flavor", flavor, "auto, qudit or qubits")
      ->check(CLI::IsMember({"auto", "qudit", "qubits"}));
  mic->add_option("--max-word-length", word_length, "eigenvector words up to this length");
  mic->add_flag("--all-candidates", unfiltered, "keep stabilizer candidates");

  std::string target;
  std::optional<std::string> rep_group;
  std::optional<int> rep_depth;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "reproduce a table, the chain or eta lists");
  reproduce_cmd->add_option("target", target, "table1, table2, table3, chain or eta")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "table3", "chain", "eta"}));
  reproduce_cmd->add_option("--group", rep_group, "eta: restrict to one group");
  reproduce_cmd->add_option("--depth", rep_depth, "eta depth override");

  std::optional<std::string> val_entry;
  int val_depth = 3;
  auto* validate = app.add_subcommand("validate-census", "check census entries against their data");
  validate->add_option("--entry", val_entry, "one entry (default: all)");
  validate->add_option("--depth", val_depth, "eta depth");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    const Census census = load_census(census_path(g));
    json doc;
    int code = kExitOk;

    if (subgroups->parsed()) {
      const CensusEntry& e = find_entry(census, q.group);
      const Listing l = list_classes(e, q, g);
      json classes = json::array();
      for (std::size_t i = 0; i < l.classes.size(); ++i) {
        if (q.id && static_cast<int>(i) != *q.id) continue;
        classes.push_back(class_to_json(l.classes[i], static_cast<int>(i)));
      }
      doc = {{"command", "subgroups"}, {"group", e.name}, {"index", q.index},
             {"torsion_free_only", q.torsion_free}, {"complete", !l.exhausted},
             {"count", l.classes.size()}, {"classes", std::move(classes)}};
      if (l.exhausted) code = kExitBudget;
    } else if (signature->parsed()) {
      if (max_index->count() == 0) throw InputError("signature needs --max-index");
      const CensusEntry& e = find_entry(census, sig_group);
      auto p = std::make_shared<const GroupPresentation>(e.presentation);
      LowIndexResult r;
      bool exhausted = false;
      try {
        r = low_index_classes(p, g.max_index, search_options(g));
      } catch (const BudgetExhausted& ex) {
        r = ex.partial();
        exhausted = true;
      }
      const int reached = exhausted ? r.complete_through : g.max_index;
      doc = {{"command", "signature"}, {"group", e.name}, {"max_index", g.max_index},
             {"complete_through", reached}, {"eta", eta_from_classes(r, reached).counts},
             {"nodes", r.nodes}};
      if (exhausted) code = kExitBudget;
    } else if (homology->parsed() || cusps->parsed()) {
      const bool want_h = homology->parsed();
      const CensusEntry& e = find_entry(census, q.group);
      doc = {{"command", want_h ? "homology" : "cusps"}, {"group", e.name}};
      if (q.index > 0) {
        const Listing l = list_classes(e, q, g);
        const SubgroupClass& s = pick(l, q);
        doc["index"] = q.index;
        doc["class"] = *q.id;
        if (want_h) {
          doc["homology"] = format_homology(*s.tags.homology);
        } else {
          doc["cusps"] = *s.tags.cusps;
        }
      } else if (want_h) {
        doc["homology"] = format_homology(abelianization(e.presentation));
      } else {
        doc["cusps"] = e.presentation.cusp_count();
      }
    } else if (fill->parsed()) {
      const CensusEntry& e = find_entry(census, fill_group);
      const FillingSlope slope = parse_slope(fill_slope);
      const GroupPresentation filled = dehn_fill(e, fill_cusp, slope);
      doc = {{"command", "fill"}, {"group", e.name}, {"cusp", fill_cusp},
             {"slope", {slope.p, slope.q}}, {"presentation", presentation_to_json(filled)},
             {"homology", format_homology(abelianization(filled))},
             {"cusps", filled.cusp_count()}};
      if (fill_order) {
        const auto order = group_order(filled, g.max_cosets);
        doc["order"] = order ? json(*order) : json();
        doc["max_cosets"] = g.max_cosets;
        if (!order) code = kExitBudget;
      }
      if (fill_target) {
        FingerprintOptions fo;
        fo.search = search_options(g);
        const MatchReport m = invariants_match(filled, find_entry(census, *fill_target), fill_depth, fo);
        doc["match"] = to_json(m);
        if (m.partial) code = kExitBudget;
      }
    } else if (chain->parsed()) {
      FingerprintOptions fo;
      fo.search = search_options(g);
      const ChainReport r = chain_walk(census, load_chain_spec(chain_spec), chain_depth, fo);
      doc = to_json(r);
      doc["command"] = "chain";
      doc["depth"] = chain_depth;
    } else if (mic->parsed()) {
      const CensusEntry& e = find_entry(census, q.group);
      const Listing l = list_classes(e, q, g);
      const SubgroupClass& s = pick(l, q);
      PauliGroupSpec spec = PauliGroupSpec::default_for(q.index);
      if (flavor == "qudit") spec = PauliGroupSpec::make(q.index, PauliFlavor::qudit_weyl_heisenberg);
      if (flavor == "qubits") spec = PauliGroupSpec::make(q.index, PauliFlavor::multi_qubit);
      FiducialOptions fo;
      fo.max_word_length = word_length;
      fo.source = e.name + " index " + std::to_string(q.index) + " class " + std::to_string(*q.id);
      if (!unfiltered) fo.filter = spec;
      json reports = json::array();
      int mics = 0;
      for (const auto& f : fiducials_from_perm_rep(permutation_rep(s.table), fo,
                                                   e.presentation.generator_names())) {
        const MicReport m = mic_report(f, spec);
        mics += m.is_mic ? 1 : 0;
        reports.push_back(to_json(m));
      }
      json cls = class_to_json(s, *q.id);
      doc = {{"command", "mic"}, {"group", e.name}, {"class", std::move(cls)},
             {"candidates", reports.size()}, {"mic_count", mics}, {"reports", std::move(reports)}};
    } else if (reproduce_cmd->parsed()) {
      ReproduceOptions o;
      o.census = census;
      std::ifstream in(std::string(BIANCHI_DATA_DIR) + "/targets.json");
      if (!in) throw InputError("cannot open targets.json in " + std::string(BIANCHI_DATA_DIR));
      o.targets = json::parse(in);
      o.data_dir = BIANCHI_DATA_DIR;
      o.search = search_options(g);
      o.max_cosets = g.max_cosets;
      o.max_index = g.stretch && max_index->count() == 0 ? 24 : g.max_index;
      o.stretch = g.stretch;
      o.group = rep_group;
      o.depth = rep_depth;
      const ReproductionReport r = reproduce(target, o);
      doc = to_json(r);
      doc["command"] = "reproduce";
      if (r.any_skipped()) code = kExitBudget;
    } else if (validate->parsed()) {
      FingerprintOptions fo;
      fo.search = search_options(g);
      json reports = json::array();
      bool all = true;
      for (const CensusEntry& e : census) {
        if (val_entry && e.name != *val_entry) continue;
        const ValidationReport r = validate_census_entry(e, val_depth, fo);
        all = all && r.all_match();
        reports.push_back(to_json(r));
      }
      if (val_entry && reports.empty()) (void)find_entry(census, *val_entry);
      doc = {{"command", "validate-census"}, {"all_match", all}, {"entries", std::move(reports)}};
    }
    emit(out, g, std::move(doc));
    return code;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace bianchi

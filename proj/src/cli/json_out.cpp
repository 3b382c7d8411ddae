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

#include "bianchi/json_out.hpp"

#include <algorithm>
#include <sstream>

#include "bianchi/homology.hpp"

namespace bianchi {

using nlohmann::json;

json to_json(const AbelianGroupType& h) { return format_homology(h); }

json class_to_json(const SubgroupClass& s, int id) {
  json j{{"id", id}, {"index", s.index()}};
  const auto& t = s.tags;
  j["covering_type"] = t.covering_type ? json(std::string(to_string(*t.covering_type))) : json();
  j["homology"] = t.homology ? to_json(*t.homology) : json();
  j["cusps"] = t.cusps ? json(*t.cusps) : json();
  j["torsion_free"] = t.torsion_free ? json(*t.torsion_free) : json();
  const PermutationRep rep = permutation_rep(s.table);
  json perms = json::object();
  const auto& names = s.parent->generator_names();
  for (std::size_t k = 0; k < rep.images.size(); ++k) perms[names[k]] = rep.images[k];
  j["permutations"] = std::move(perms);
  return j;
}

json to_json(const InvariantFingerprint& f) {
  json j{{"depth", f.depth},
         {"eta_depth", f.eta_depth},
         {"eta", f.eta.counts},
         {"homology", format_homology(f.homology)},
         {"cusps", f.cusps}};
  j["order"] = f.order ? json(*f.order) : json();
  return j;
}

json to_json(const MatchReport& r) {
  json fields = json::array();
  for (const auto& f : r.fields) {
    fields.push_back({{"field", f.field},
                      {"expected", f.expected},
                      {"computed", f.computed},
                      {"match", f.match}});
  }
  return {{"target", r.target},
          {"verdict", r.verdict()},
          {"partial", r.partial},
          {"fields", std::move(fields)},
          {"computed", to_json(r.computed)},
          {"expected", to_json(r.expected)}};
}

json to_json(const ChainReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    json attempts = json::array();
    for (const auto& a : s.attempts) attempts.push_back({{"cusp", a.cusp}, {"match", to_json(a.match)}});
    steps.push_back({{"from", s.step.from},
                     {"to", s.step.to},
                     {"cusp", s.step.cusp ? json(*s.step.cusp) : json("search")},
                     {"slope", {s.step.slope.p, s.step.slope.q}},
                     {"matched_cusp", s.matched_cusp ? json(*s.matched_cusp) : json()},
                     {"verdict", s.consistent() ? "consistent" : "inconsistent"},
                     {"attempts", std::move(attempts)}});
  }
  return {{"steps", std::move(steps)},
          {"verdict", r.consistent() ? "consistent" : "inconsistent"}};
}

json to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"field", c.field},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"match", c.match}});
  }
  return {{"entry", r.entry},
          {"depth", r.depth},
          {"all_match", r.all_match()},
          {"checks", std::move(checks)}};
}

json presentation_to_json(const GroupPresentation& p) {
  const auto& names = p.generator_names();
  json rels = json::array();
  for (const Word& w : p.relators()) rels.push_back(render_word(w, names));
  json peripheral = json::array();
  for (const auto& c : p.peripheral()) {
    peripheral.push_back({{"m", render_word(c.meridian, names)},
                          {"l", render_word(c.longitude, names)}});
  }
  return {{"generators", names}, {"relators", std::move(rels)}, {"peripheral", std::move(peripheral)}};
}

namespace {

std::string scalar_text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(12);
    os << v.get<double>();
    return os.str();
  }
  return v.dump();
}

bool is_table(const json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_object(); });
}

void render(const json& doc, const std::string& indent, std::ostringstream& os);

void render_table(const json& rows, const std::string& indent, std::ostringstream& os) {
  // Columns are the non-table keys of all rows, in order of appearance.
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& [k, v] : row.items()) {
      if (is_table(v)) continue;
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto it = row.find(cols[c]);
      line.push_back(it == row.end() ? "" : scalar_text(*it));
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << line[c];
      if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
    }
    os << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
  // Nested tables follow their row.
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [k, v] : rows[r].items()) {
      if (!is_table(v)) continue;
      os << indent << "[" << r << "]." << k << ":\n";
      render_table(v, indent + "  ", os);
    }
  }
}

void render(const json& doc, const std::string& indent, std::ostringstream& os) {
  for (const auto& [k, v] : doc.items()) {
    if (is_table(v)) {
      os << indent << k << ":\n";
      render_table(v, indent + "  ", os);
    } else if (v.is_object() && !v.empty()) {
      os << indent << k << ":\n";
      render(v, indent + "  ", os);
    } else {
      os << indent << k << ": " << scalar_text(v) << '\n';
    }
  }
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream os;
  if (doc.is_object()) {
    render(doc, "", os);
  } else {
    os << scalar_text(doc) << '\n';
  }
  return os.str();
}

}  // namespace bianchi

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

#include "bianchi/census.hpp"

#include <fstream>
#include <set>

#include "bianchi/errors.hpp"

namespace bianchi {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& entry, const std::string& field,
                       const std::string& why) {
  throw ParseError("census entry '" + entry + "', field '" + field + "': " + why);
}

const json& require(const json& obj, const char* key, const std::string& entry) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(entry, key, "missing");
  return *it;
}

std::string as_string(const json& v, const std::string& entry, const std::string& field) {
  if (!v.is_string()) fail(entry, field, "expected a string");
  return v.get<std::string>();
}

Word as_word(const json& v, const std::vector<std::string>& alphabet,
             const std::string& entry, const std::string& field) {
  try {
    return parse_word(as_string(v, entry, field), alphabet);
  } catch (const InputError& e) {
    fail(entry, field, e.what());
  }
}

CensusEntry parse_entry(const json& obj, std::size_t position) {
  if (!obj.is_object()) {
    throw ParseError("census record " + std::to_string(position) + " is not an object");
  }
  const auto name_it = obj.find("name");
  if (name_it == obj.end() || !name_it->is_string()) {
    throw ParseError("census record " + std::to_string(position) + ": missing name");
  }
  CensusEntry e;
  e.name = name_it->get<std::string>();

  if (const auto it = obj.find("aliases"); it != obj.end()) {
    if (!it->is_array()) fail(e.name, "aliases", "expected an array");
    for (const json& a : *it) e.aliases.push_back(as_string(a, e.name, "aliases"));
  }

  const json& gens = require(obj, "generators", e.name);
  if (!gens.is_array() || gens.empty()) fail(e.name, "generators", "expected a non-empty array");
  std::vector<std::string> names;
  for (const json& g : gens) {
    std::string s = as_string(g, e.name, "generators");
    if (s.size() != 1 || s[0] < 'a' || s[0] > 'z') {
      fail(e.name, "generators", "generator names must be single lower-case letters");
    }
    names.push_back(std::move(s));
  }
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
    fail(e.name, "generators", "duplicate generator letter");
  }

  std::vector<Word> relators;
  const json& rels = require(obj, "relators", e.name);
  if (!rels.is_array()) fail(e.name, "relators", "expected an array");
  for (const json& r : rels) relators.push_back(as_word(r, names, e.name, "relators"));

  std::vector<PeripheralPair> peripheral;
  if (const auto it = obj.find("peripheral"); it != obj.end()) {
    if (!it->is_array()) fail(e.name, "peripheral", "expected an array");
    for (const json& p : *it) {
      if (!p.is_object()) fail(e.name, "peripheral", "expected {\"m\", \"l\"} objects");
      PeripheralPair pair{as_word(require(p, "m", e.name), names, e.name, "peripheral.m"),
                          as_word(require(p, "l", e.name), names, e.name, "peripheral.l"),
                          {}};
      if (const auto x = p.find("x"); x != p.end()) {
        if (!x->is_array()) fail(e.name, "peripheral.x", "expected an array");
        for (const json& w : *x) pair.extra.push_back(as_word(w, names, e.name, "peripheral.x"));
      }
      peripheral.push_back(std::move(pair));
    }
  }

  std::vector<TorsionRep> torsion;
  if (const auto it = obj.find("torsion"); it != obj.end()) {
    if (!it->is_array()) fail(e.name, "torsion", "expected an array");
    for (const json& t : *it) {
      if (!t.is_object()) fail(e.name, "torsion", "expected {\"word\", \"order\"} objects");
      const json& order = require(t, "order", e.name);
      if (!order.is_number_integer() || order.get<int>() < 2) {
        fail(e.name, "torsion.order", "expected an integer >= 2");
      }
      torsion.push_back({as_word(require(t, "word", e.name), names, e.name, "torsion.word"),
                         order.get<int>()});
    }
  }

  if (const auto it = obj.find("expected"); it != obj.end() && !it->is_null()) {
    if (!it->is_object()) fail(e.name, "expected", "expected an object");
    ExpectedInvariants ex;
    if (const auto v = it->find("eta"); v != it->end()) {
      if (!v->is_array()) fail(e.name, "expected.eta", "expected an integer array");
      for (const json& n : *v) {
        if (!n.is_number_unsigned()) fail(e.name, "expected.eta", "expected non-negative integers");
        ex.eta.push_back(n.get<std::uint64_t>());
      }
    }
    if (const auto v = it->find("homology"); v != it->end()) {
      ex.homology = as_string(*v, e.name, "expected.homology");
    }
    auto opt_int = [&](const char* key) -> std::optional<int> {
      const auto v = it->find(key);
      if (v == it->end()) return std::nullopt;
      if (!v->is_number_integer()) fail(e.name, std::string("expected.") + key, "expected an integer");
      return v->get<int>();
    };
    ex.cusps = opt_int("cusps");
    ex.reported_cusps = opt_int("reported_cusps");
    if (const auto v = it->find("ideal"); v != it->end()) {
      ex.ideal = as_string(*v, e.name, "expected.ideal");
    }
    if (const auto v = it->find("order"); v != it->end()) {
      if (!v->is_number_unsigned()) fail(e.name, "expected.order", "expected a positive integer");
      ex.order = v->get<std::uint64_t>();
    }
    e.expected = std::move(ex);
  }

  try {
    e.presentation = GroupPresentation(std::move(names), std::move(relators),
                                       std::move(peripheral), std::move(torsion));
  } catch (const InputError& err) {
    fail(e.name, "presentation", err.what());
  }
  if (e.expected && e.expected->cusps &&
      *e.expected->cusps != e.presentation.cusp_count()) {
    throw ValidationError("census entry '" + e.name + "': expected " +
                          std::to_string(*e.expected->cusps) + " cusps but " +
                          std::to_string(e.presentation.cusp_count()) +
                          " peripheral pairs are given");
  }
  return e;
}

}  // namespace

Census parse_census(const json& doc) {
  if (!doc.is_array()) throw ParseError("census must be a JSON array");
  Census out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    CensusEntry e = parse_entry(doc[i], i);
    if (!seen.insert(e.name).second) {
      throw ValidationError("duplicate census entry name '" + e.name + "'");
    }
    out.push_back(std::move(e));
  }
  return out;
}

Census load_census(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open census file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("census file " + path.string() + ": " + e.what());
  }
  return parse_census(doc);
}

json entry_to_json(const CensusEntry& e) {
  const auto& p = e.presentation;
  const auto& names = p.generator_names();
  json obj;
  obj["name"] = e.name;
  obj["aliases"] = e.aliases;
  obj["generators"] = names;
  json rels = json::array();
  for (const Word& r : p.relators()) rels.push_back(render_word(r, names));
  obj["relators"] = std::move(rels);
  json periph = json::array();
  for (const PeripheralPair& pair : p.peripheral()) {
    json q{{"m", render_word(pair.meridian, names)},
           {"l", render_word(pair.longitude, names)}};
    if (!pair.extra.empty()) {
      json x = json::array();
      for (const Word& w : pair.extra) x.push_back(render_word(w, names));
      q["x"] = std::move(x);
    }
    periph.push_back(std::move(q));
  }
  obj["peripheral"] = std::move(periph);
  json tors = json::array();
  for (const TorsionRep& t : p.torsion()) {
    tors.push_back({{"word", render_word(t.word, names)}, {"order", t.order}});
  }
  obj["torsion"] = std::move(tors);
  if (e.expected) {
    const auto& ex = *e.expected;
    json exp = json::object();
    if (!ex.eta.empty()) exp["eta"] = ex.eta;
    if (ex.homology) exp["homology"] = *ex.homology;
    if (ex.cusps) exp["cusps"] = *ex.cusps;
    if (ex.ideal) exp["ideal"] = *ex.ideal;
    if (ex.reported_cusps) exp["reported_cusps"] = *ex.reported_cusps;
    if (ex.order) exp["order"] = *ex.order;
    obj["expected"] = std::move(exp);
  }
  return obj;
}

json census_to_json(const Census& census) {
  json out = json::array();
  for (const CensusEntry& e : census) out.push_back(entry_to_json(e));
  return out;
}

const CensusEntry& find_entry(const Census& census, std::string_view name) {
  for (const CensusEntry& e : census) {
    if (e.name == name) return e;
  }
  for (const CensusEntry& e : census) {
    for (const std::string& a : e.aliases) {
      if (a == name) return e;
    }
  }
  throw InputError("no census entry named '" + std::string(name) + "'");
}

}  // namespace bianchi

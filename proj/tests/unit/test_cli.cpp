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

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bianchi/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = bianchi::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("subgroups lists every index-3 class of the magic manifold") {
  const Run r = run({"--deterministic", "subgroups", "--group", "L6a5", "--index", "3"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["count"] == 17);
  int z5 = 0;
  for (const auto& c : doc["classes"]) {
    if (c["homology"] == "1^{+5}" && c["cusps"] == 5 && c["covering_type"] == "irr") ++z5;
  }
  CHECK(z5 == 3);
  CHECK_FALSE(doc.contains("generated_at"));
}

TEST_CASE("timestamps appear unless deterministic") {
  const Run r = run({"homology", "--group", "L6a5"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).contains("generated_at"));
}

TEST_CASE("deterministic output is byte-identical across worker counts") {
  const Run a = run({"--deterministic", "subgroups", "--group", "L6a2", "--index", "4"});
  const Run b = run({"--deterministic", "--jobs", "4", "subgroups", "--group", "L6a2", "--index", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("bad input exits with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"subgroups", "--group", "NoSuchGroup", "--index", "2"}).code == 2);
  CHECK(run({"signature", "--group", "L6a5"}).code == 2);
  CHECK(run({"fill", "--group", "K4a1", "--slope", "2,4"}).code == 2);
  CHECK(run({"--format", "xml", "homology", "--group", "L6a5"}).code == 2);
  CHECK(run({"mic", "--group", "L6a5", "--index", "3", "--class", "99"}).code == 2);
  CHECK(run({"--census", "/nonexistent/census.json", "homology", "--group", "L6a5"}).code == 2);
}

TEST_CASE("budget exhaustion exits with 1 and prints the partial report") {
  const Run r = run({"--deterministic", "--max-nodes", "30", "--max-index", "4", "signature",
                     "--group", "L8n7"});
  CHECK(r.code == 1);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["complete_through"].get<int>() < 4);
}

TEST_CASE("fill reports homology and optional order") {
  const Run r = run({"--deterministic", "fill", "--group", "K4a1", "--slope=1,0", "--order"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["homology"] == "0");
  CHECK(doc["order"] == 1);
}

TEST_CASE("mic report for the Z^5 class") {
  const Run list = run({"--deterministic", "subgroups", "--group", "L6a5", "--index", "3"});
  const auto classes = nlohmann::json::parse(list.out)["classes"];
  int id = -1;
  for (const auto& c : classes) {
    if (c["homology"] == "1^{+5}" && c["covering_type"] == "irr") {
      id = c["id"];
      break;
    }
  }
  REQUIRE(id >= 0);
  const Run r = run({"--deterministic", "mic", "--group", "L6a5", "--index", "3", "--class",
                     std::to_string(id)});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["reports"].size() > 0);
  CHECK(doc["reports"][0]["is_sic"] == true);
}

TEST_CASE("text format renders aligned columns") {
  const Run r = run({"--deterministic", "--format", "text", "subgroups", "--group", "L6a5",
                     "--index", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("covering_type") != std::string::npos);
  CHECK(r.out.find("count: 7") != std::string::npos);
}

TEST_CASE("eta reproduction for one group") {
  const Run r = run({"--deterministic", "reproduce", "eta", "--group", "L12n2256", "--depth", "3"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["computed"] == nlohmann::json::array({63, 580}));
  CHECK(doc["rows"][0]["verdict"] == "match");
}

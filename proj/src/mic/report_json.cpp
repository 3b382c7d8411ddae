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

#include "bianchi/report_json.hpp"

namespace bianchi {

nlohmann::json to_json(const FiducialState& f) {
  nlohmann::json amps = nlohmann::json::array();
  for (Eigen::Index i = 0; i < f.amplitudes.size(); ++i) {
    amps.push_back({f.amplitudes(i).real(), f.amplitudes(i).imag()});
  }
  return {{"amplitudes", amps},
          {"provenance",
           {{"source", f.provenance.source},
            {"word", f.provenance.word},
            {"cycle", f.provenance.cycle},
            {"eigenvalue_index", f.provenance.eigenvalue_index}}}};
}

nlohmann::json to_json(const GeometryInvariants& g) {
  nlohmann::json lpp = nlohmann::json::array();
  for (const auto& [lines, points] : g.lines_per_point) {
    lpp.push_back({{"lines", lines}, {"points", points}});
  }
  return {{"rule", g.rule},
          {"point_count", g.point_count},
          {"line_count", g.line_count},
          {"points_per_line", g.points_per_line},
          {"lines_per_point", lpp},
          {"pair_graph_degrees", g.pair_graph_degrees},
          {"girth", g.girth},
          {"recognized_as", std::string(to_string(g.recognized_as))},
          {"lines", g.lines}};
}

nlohmann::json to_json(const MicReport& r) {
  nlohmann::json angles = nlohmann::json::array();
  for (const AngleClass& a : r.angle_classes) {
    angles.push_back({{"value", a.value}, {"multiplicity", a.multiplicity}});
  }
  return {{"dimension", r.spec.dimension},
          {"flavor", std::string(to_string(r.spec.flavor))},
          {"fiducial", to_json(r.fiducial)},
          {"gram_rank", r.gram_rank},
          {"angle_classes", angles},
          {"is_sic", r.is_sic},
          {"is_mic", r.is_mic},
          {"resolution_defect", r.resolution_defect},
          {"non_stabilizer", r.non_stabilizer},
          {"stabilizer_test_heuristic", r.stabilizer_test_heuristic},
          {"geometry", to_json(r.geometry)}};
}

}  // namespace bianchi

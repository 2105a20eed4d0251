// Copyright 2026 The trimin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trimin/json_io.hpp"

#include <string>

#include "trimin/error.hpp"
#include "trimin/graph6.hpp"

namespace trimin {

Json to_json(const ExtremalProfile& p) {
  return Json{{"n", p.n},         {"e", p.e},           {"k", p.k},
              {"a_star", p.a_star}, {"m_star", p.m_star}, {"h_star", p.h_star}};
}

Json to_json(const OracleResult& r) {
  Json ext = Json::array();
  for (const CanonicalForm& f : r.extremal) ext.push_back(to_graph6(unpack(f)));
  return Json{{"n", r.n},
              {"e", r.e},
              {"g3", r.g3_min},
              {"extremal", ext},
              {"classes_scanned", r.classes_scanned}};
}

Json to_json(const PartitionAnalysis& a) {
  return Json{{"parts", a.parts},
              {"missing", a.missing},
              {"bad", a.bad},
              {"cut_edges", a.cut_edges},
              {"missing_degrees", a.missing_degrees},
              {"z_threshold", a.z_threshold},
              {"z", a.z}};
}

Json to_json(const Membership& m) {
  Json j{{"member", m.member}};
  if (m.member) j["witness"] = m.witness;
  return j;
}

Json partition_to_json(const Partition& p) { return Json{{"parts", p}}; }

Partition partition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array()) {
    throw DomainError("partition JSON needs a \"parts\" array");
  }
  Partition p;
  for (const Json& part : j["parts"]) {
    if (!part.is_array()) throw DomainError("each part must be an array");
    std::vector<int> vs;
    for (const Json& v : part) {
      if (!v.is_number_integer()) throw DomainError("vertices must be integers");
      vs.push_back(v.get<int>());
    }
    p.push_back(vs);
  }
  return p;
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& ed : g.edges()) edges.push_back({ed.u, ed.v});
  return Json{{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
      !j.contains("edges") || !j["edges"].is_array()) {
    throw DomainError("graph JSON needs integer \"n\" and an \"edges\" array");
  }
  std::vector<Edge> edges;
  for (const Json& ed : j["edges"]) {
    if (!ed.is_array() || ed.size() != 2 || !ed[0].is_number_integer() ||
        !ed[1].is_number_integer()) {
      throw DomainError("each edge must be a pair of integers");
    }
    edges.push_back({ed[0].get<int>(), ed[1].get<int>()});
  }
  return build_graph(j["n"].get<int>(), edges);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError("invalid JSON: " + std::string(err.what()),
                     static_cast<std::size_t>(err.byte));
  }
}

}  // namespace trimin

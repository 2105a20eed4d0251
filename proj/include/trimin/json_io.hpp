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

#pragma once

#include <string_view>

#include "json.hpp"
#include "trimin/analyze.hpp"
#include "trimin/extremal.hpp"
#include "trimin/families.hpp"
#include "trimin/graph.hpp"
#include "trimin/oracle.hpp"

namespace trimin {

using Json = nlohmann::ordered_json;

/// {"n","e","k","a_star","m_star","h_star"}
Json to_json(const ExtremalProfile& p);
/// {"n","e","g3","extremal":[graph6...]} plus "classes_scanned".
Json to_json(const OracleResult& r);
Json to_json(const PartitionAnalysis& a);
Json to_json(const Membership& m);

/// {"parts":[[...],...]}
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// Adjacency-list fixture {"n": N, "edges": [[u,v],...]}.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Parses text, turning JSON syntax errors into ParseError.
Json parse_json(std::string_view text);

}  // namespace trimin

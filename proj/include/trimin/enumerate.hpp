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

#include <cstdint>
#include <functional>
#include <vector>

#include "trimin/canonical.hpp"
#include "trimin/graph.hpp"

namespace trimin {

/// Orders up to this are enumerated freely; kMaxCanonicalOrder needs the
/// explicit long-running flag.
inline constexpr int kMaxRoutineEnumerationOrder = 9;

struct EnumerationOptions {
  bool allow_large = false;  // permit n = 10
  int jobs = 1;
  /// Optional filter. It must be closed under edge deletion (if it rejects
  /// g it rejects every supergraph of g), since rejected graphs are not
  /// extended.
  std::function<bool(const Graph&)> keep;
};

/// Throws UnsupportedError with an estimated cost when n is out of range.
void check_enumeration_bounds(int n, bool allow_large);

/// Isomorphism classes of graphs on n vertices, one vector per edge count
/// 0..max_edges, each sorted by canonical form. Generated level by level:
/// every class at level j+1 arises from some class at level j by adding one
/// edge, and children are deduplicated by canonical form.
std::vector<std::vector<CanonicalForm>> classes_by_edges(
    int n, std::int64_t max_edges, const EnumerationOptions& opts = {});

/// One canonical representative per class with n vertices and e edges.
std::vector<Graph> enumerate_graphs(int n, std::int64_t e,
                                    const EnumerationOptions& opts = {});

/// Default worker count: the TRIMIN_JOBS environment variable, else 1.
int default_jobs();

}  // namespace trimin

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

#include "trimin/families.hpp"
#include "trimin/graph.hpp"

namespace trimin {

struct SymmetriseResult {
  Graph graph;
  /// A_1..A_t of the output; A_{t-1} and A_t split the chosen part B.
  Partition parts;
  int t = 0;
  /// Index (in the input partition) of the part chosen as B.
  int b_index = -1;
  /// Star size removed between A_{t-1} and A_t.
  std::int64_t m_prime = 0;
};

/// Runs the six-step symmetrisation on an H0 member with its witness
/// partition B_1..B_{k-1}. Throws DomainError if the partition is not an
/// H0-canonical partition of g.
///
/// Step 2 moves edges from smaller partially full parts into larger ones
/// (largest first), which never increases the triangle count. Step 3 takes
/// the partially full part if one is left, else the lowest-index part that
/// is full and has an edge.
SymmetriseResult symmetrise_h0(const Graph& g, const Partition& parts);

}  // namespace trimin

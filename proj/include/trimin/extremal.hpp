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
#include <span>
#include <string_view>
#include <vector>

#include "trimin/graph.hpp"

namespace trimin {

/// Parameters of the conjectured minimiser H*(n,e): a complete k-partite
/// graph with parts a_star minus a star of m_star edges between the last two
/// parts, which has h_star triangles.
struct ExtremalProfile {
  std::int64_t n = 0;
  std::int64_t e = 0;
  int k = 0;
  std::vector<std::int64_t> a_star;
  std::int64_t m_star = 0;
  std::int64_t h_star = 0;

  friend bool operator==(const ExtremalProfile&,
                         const ExtremalProfile&) = default;
};

/// e = 0 gives the degenerate profile k = 1, a_star = (n).
ExtremalProfile extremal_profile(std::int64_t n, std::int64_t e);

/// Triangle count of a complete multipartite graph with the given parts.
std::int64_t multipartite_triangles(std::span<const std::int64_t> sizes);
/// Edge count of a complete multipartite graph with the given parts.
std::int64_t multipartite_edges(std::span<const std::int64_t> sizes);

/// Complete multipartite graph; part i occupies a contiguous block of
/// vertices in the given order.
Graph complete_multipartite(std::span<const std::int64_t> sizes);

/// H*(n,e) with parts laid out in order a*_1..a*_k. The removed star is
/// centred at the first vertex of part k with leaves on the first m* vertices
/// of part k-1.
Graph build_h_star(std::int64_t n, std::int64_t e);

/// How the profile moves from e to e+1.
enum class DeltaCase {
  kMissingEdgeRestored,  // m* > 0: same part vector, one star edge restored
  kLastPartGrows,        // m* = 0, a*_1 >= a*_k + 2
  kNewPart,              // m* = 0, a*_1 <= a*_k + 1: k increases
};

std::string_view to_string(DeltaCase c);

struct HStarDelta {
  std::int64_t delta = 0;  // h*(n,e+1) - h*(n,e)
  DeltaCase kind = DeltaCase::kNewPart;
};

HStarDelta h_star_delta(std::int64_t n, std::int64_t e);

/// Slope inequalities at (n,e) for t_{k-1}(n) + k <= e <= t_k(n) - 1:
/// |h*(n,e+1) - h*(n,e) - (k-2)cn| <= k and |a*_i - cn| <= 2 for i < k,
/// decided exactly through c_compare.
struct SlopeCheck {
  bool in_range = false;
  bool delta_ok = false;
  bool parts_ok = false;
};

SlopeCheck check_slopes(std::int64_t n, std::int64_t e);

/// h(n,e), which equals h*(n,e). With audit = true (n <= 7) the minimum over
/// the enumerated members of H1(n,e) and H2(n,e) is recomputed and must
/// agree; a disagreement throws std::logic_error.
std::int64_t h_of(std::int64_t n, std::int64_t e, bool audit = false);

}  // namespace trimin

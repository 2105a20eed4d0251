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
#include <string>
#include <vector>

#include "trimin/canonical.hpp"
#include "trimin/graph.hpp"

namespace trimin {

struct OracleOptions {
  bool allow_large = false;  // n = 10
  int jobs = 1;
};

struct OracleResult {
  int n = 0;
  std::int64_t e = 0;
  std::int64_t g3_min = 0;
  std::vector<CanonicalForm> extremal;  // sorted
  std::int64_t classes_scanned = 0;
};

/// Minimum triangle count over all (n,e)-graphs with every minimiser.
/// Generation discards graphs with more than h*(n,e) triangles; the count
/// only grows when edges are added, so no minimiser is lost.
OracleResult g3_bruteforce(int n, std::int64_t e, const OracleOptions& opts = {});

/// One result per e = 0..C(n,2) from a single unpruned enumeration.
std::vector<OracleResult> g3_sweep(int n, const OracleOptions& opts = {});

struct ConjectureCell {
  std::int64_t e = 0;
  std::int64_t g3_min = 0;
  std::int64_t h_star = 0;
  bool value_ok = false;
  bool set_ok = false;
  std::size_t oracle_count = 0;
  std::size_t family_count = 0;
  /// graph6 of classes found by only one side.
  std::vector<std::string> only_oracle;
  std::vector<std::string> only_family;
};

struct ConjectureReport {
  int n = 0;
  std::vector<ConjectureCell> cells;  // e = 1..C(n,2)
  bool passed() const;
};

/// For each e >= 1 compares the oracle's minimum with h*(n,e) and its
/// minimiser set with starred H0 ∪ starred H2. Discrepancies are recorded,
/// never thrown.
ConjectureReport verify_conjecture(int n, const OracleOptions& opts = {});
/// Same, reusing a sweep from g3_sweep(n).
ConjectureReport verify_conjecture(const std::vector<OracleResult>& sweep);

/// Minimum over k-partite (n,e)-graphs, k = k_index(n,e), with all
/// minimisers. Part-size vectors are enumerated and edges deleted from each
/// K[sizes] level by level, deduplicated by canonical form.
OracleResult kpartite_min(int n, std::int64_t e, int k);

struct LocalSearchResult {
  std::int64_t best = 0;
  Graph witness;
};

inline constexpr std::uint64_t kDefaultSeed = 20260101;

inline constexpr std::int64_t kDefaultLocalSearchBudget = 2000;

/// Hill climbing over (n,e)-graphs with single-edge swaps. Restart 0 starts
/// at H*(n,e) unless start_at_h_star is false, the rest at uniform random
/// graphs. Equal moves are taken with probability 1/2.
LocalSearchResult local_search_upper(int n, std::int64_t e, int restarts,
                                     std::int64_t budget = kDefaultLocalSearchBudget,
                                     std::uint64_t seed = kDefaultSeed,
                                     bool start_at_h_star = true);

}  // namespace trimin

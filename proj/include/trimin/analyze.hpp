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
#include <optional>
#include <random>
#include <vector>

#include "trimin/families.hpp"
#include "trimin/graph.hpp"
#include "trimin/rational.hpp"

namespace trimin {

/// Bookkeeping of a graph against a k-partition V_1..V_k (V_k last).
struct PartitionAnalysis {
  Partition parts;
  /// m_i = number of non-adjacent pairs between V_i and V_k, i < k.
  std::vector<std::int64_t> missing;
  /// Edges inside parts.
  std::int64_t bad = 0;
  /// d^m(v): non-neighbours of v outside its own part.
  std::vector<std::int64_t> missing_degrees;
  /// Vertices with d^m(v) >= z_threshold * n.
  std::vector<int> z;
  double z_threshold = 0.0;
  std::int64_t cut_edges = 0;
};

inline constexpr double kDefaultZThreshold = 0.1;

PartitionAnalysis analyze_partition(const Graph& g, const Partition& parts,
                                    double z_threshold = kDefaultZThreshold);

enum class CutMode { kExact, kHeuristic };

inline constexpr double kMaxExactCutStates = 1e8;

/// Partition maximising cross edges (exact, k^n <= 1e8) or a local maximum
/// under single-vertex moves (heuristic). Parts come out sorted by size,
/// largest first, so the last part is a smallest one.
PartitionAnalysis max_cut_partition(const Graph& g, int k, CutMode mode,
                                    double z_threshold = kDefaultZThreshold,
                                    std::uint64_t seed = 20260101);

struct PropertyFlags {
  bool p1 = false;
  bool p2 = false;
  bool p3 = false;
  bool p4 = false;
  bool p5 = false;
  /// U = {y : d^m(y) >= gamma1 * n}.
  std::vector<int> u;
};

PropertyFlags check_partition_properties(const Graph& g, const Partition& parts,
                                         double beta, double gamma1,
                                         double gamma2, double delta, double c);

struct GapBoundResult {
  Rational bound;
  Rational difference;  // K3(G) - K3(F)
  bool holds = false;
};

/// Comparison of two k-partite graphs G (parts A) and F (parts B) with the
/// same order and size. Checks every hypothesis and throws DomainError
/// naming the first one that fails.
GapBoundResult kpartite_gap_bound(const Graph& g, const Partition& a,
                                  const Graph& f, const Partition& b,
                                  std::int64_t d);

/// Graph-free description of G for orders beyond 64: parts A_1..A_k are
/// independent, the first k-1 are pairwise complete, and vertex x of A_k
/// misses last_part_missing[x][i] vertices of A_i.
struct KPartiteShape {
  std::vector<std::int64_t> sizes;
  std::vector<std::vector<std::int64_t>> last_part_missing;
};

/// Same comparison with F = K[f_sizes] minus f_missing edges between its
/// last two parts.
GapBoundResult kpartite_gap_bound(const KPartiteShape& g,
                                  const std::vector<std::int64_t>& f_sizes,
                                  std::int64_t f_missing, std::int64_t d);

struct GapInstance {
  Graph g;
  Partition a;
  Graph f;
  Partition b;
  std::int64_t d = 0;
};

/// Random hypothesis-satisfying instance with n <= max_n.
GapInstance random_gap_instance(std::mt19937_64& rng, int max_n);

struct GapShapeInstance {
  KPartiteShape g;
  std::vector<std::int64_t> f_sizes;
  std::int64_t f_missing = 0;
  std::int64_t d = 0;
};

/// Random structural instance with l - l_k >= 24 k^3, so the size
/// deviations d_i can be nonzero.
GapShapeInstance random_gap_shape(std::mt19937_64& rng);

struct IdentityCheck {
  bool triple_ok = false;
  /// Empty when e >= n^2/2 (s undefined).
  std::optional<bool> s_identity_ok;
};

/// e(n-2) = 3N3 + 2N2 + N1, and K3 = C(s,3)(n/s)^3 + (sum q^2 + N1)/3 with
/// n^2 - 2e = n^2/s and q(x) = 2e/n - d(x), both in exact arithmetic.
IdentityCheck ls_identities(const Graph& g);

}  // namespace trimin

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

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace trimin {

using Row = std::uint64_t;

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Dense simple graph on at most 64 vertices. Row i holds the neighbourhood
/// of vertex i as a bitset, so N(x) & N(y) is a single AND.
///
/// Every mutator keeps the adjacency symmetric and loop-free.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);

  int order() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return edges_; }

  Row row(int v) const noexcept { return adj_[v]; }
  /// Bitmask with the low `order()` bits set.
  Row vertex_mask() const noexcept;

  bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  int degree(int v) const noexcept { return std::popcount(adj_[v]); }

  /// Adds uv; returns false if it was already present. Loops are rejected.
  bool add_edge(int u, int v);
  /// Removes uv; returns false if it was absent.
  bool remove_edge(int u, int v);

  std::vector<Edge> edges() const;
  Graph complement() const;
  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabel(std::span<const int> perm) const;
  /// Subgraph induced on the listed vertices, renumbered 0..k-1 in order.
  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::int64_t edges_ = 0;
  std::array<Row, kMaxOrder> adj_{};
};

/// Counts of 3-vertex subsets inducing exactly 0, 1, 2 and 3 edges.
struct ThreeProfile {
  std::int64_t n0 = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t n3 = 0;
  friend bool operator==(const ThreeProfile&, const ThreeProfile&) = default;
};

/// Builds a graph from an edge list, rejecting out-of-range endpoints, loops
/// and repeated pairs with a DomainError naming the pair.
Graph build_graph(int n, std::span<const Edge> edges);

std::int64_t count_triangles(const Graph& g);
/// Number of r-cliques; r > n gives 0.
std::int64_t count_cliques(const Graph& g, int r);
bool is_triangle_free(const Graph& g);

/// |N(x) ∩ N(y)|, whether or not xy is an edge.
int codegree(const Graph& g, int x, int y);

ThreeProfile three_profile(const Graph& g);

/// |E(g) △ E(h)| on the shared labeling.
std::int64_t edit_distance(const Graph& g, const Graph& h);

/// Vertices of a bitmask in increasing order.
std::vector<int> bits_to_vertices(Row mask);

inline std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }
inline std::int64_t choose3(std::int64_t n) {
  return n * (n - 1) * (n - 2) / 6;
}

}  // namespace trimin

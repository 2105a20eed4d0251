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

#include "trimin/graph.hpp"

#include <string>

#include "trimin/error.hpp"

namespace trimin {

namespace {

std::string pair_name(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw DomainError("vertex " + std::to_string(v) + " out of range [0," +
                      std::to_string(n) + ")");
  }
}

std::int64_t cliques_from(const Graph& g, Row candidates, int remaining) {
  if (remaining == 0) return 1;
  if (remaining == 1) return std::popcount(candidates);
  std::int64_t total = 0;
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    // Only extend with higher-numbered vertices so each clique is seen once.
    total += cliques_from(g, candidates & g.row(v), remaining - 1);
  }
  return total;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) {
    throw DomainError("vertex count " + std::to_string(n) +
                      " outside [0,64]");
  }
}

Graph Graph::complete(int n) {
  Graph g(n);
  const Row all = g.vertex_mask();
  for (int v = 0; v < n; ++v) g.adj_[v] = all & ~(Row{1} << v);
  g.edges_ = choose2(n);
  return g;
}

Row Graph::vertex_mask() const noexcept {
  return n_ == 64 ? ~Row{0} : (Row{1} << n_) - 1;
}

bool Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return false;
  adj_[u] |= Row{1} << v;
  adj_[v] |= Row{1} << u;
  ++edges_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v || !has_edge(u, v)) return false;
  adj_[u] &= ~(Row{1} << v);
  adj_[v] &= ~(Row{1} << u);
  --edges_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < n_; ++u) {
    Row higher = adj_[u] & ~((Row{2} << u) - 1);
    while (higher != 0) {
      out.push_back({u, std::countr_zero(higher)});
      higher &= higher - 1;
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  const Row all = vertex_mask();
  for (int v = 0; v < n_; ++v) g.adj_[v] = all & ~adj_[v] & ~(Row{1} << v);
  g.edges_ = choose2(n_) - edges_;
  return g;
}

Graph Graph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw DomainError("relabeling has wrong length");
  }
  Graph g(n_);
  for (int u = 0; u < n_; ++u) {
    Row r = adj_[u];
    Row mapped = 0;
    while (r != 0) {
      mapped |= Row{1} << perm[std::countr_zero(r)];
      r &= r - 1;
    }
    g.adj_[perm[u]] = mapped;
  }
  g.edges_ = edges_;
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) {
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 1 || n > Graph::kMaxOrder) {
    throw DomainError("vertex count " + std::to_string(n) +
                      " outside [1,64]");
  }
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw DomainError("edge " + pair_name(e.u, e.v) +
                        " has an endpoint out of range");
    }
    if (e.u == e.v) {
      throw DomainError("edge " + pair_name(e.u, e.v) + " is a loop");
    }
    if (!g.add_edge(e.u, e.v)) {
      throw DomainError("edge " + pair_name(e.u, e.v) + " is repeated");
    }
  }
  return g;
}

std::int64_t count_triangles(const Graph& g) {
  std::int64_t total = 0;
  for (int u = 0; u < g.order(); ++u) {
    Row higher = g.row(u) & ~((Row{2} << u) - 1);
    while (higher != 0) {
      const int v = std::countr_zero(higher);
      higher &= higher - 1;
      total += std::popcount(g.row(u) & g.row(v));
    }
  }
  // Each triangle is seen once per edge.
  return total / 3;
}

std::int64_t count_cliques(const Graph& g, int r) {
  if (r < 1) throw DomainError("clique order must be at least 1");
  if (r > g.order()) return 0;
  if (r == 1) return g.order();
  if (r == 2) return g.edge_count();
  if (r == 3) return count_triangles(g);
  return cliques_from(g, g.vertex_mask(), r);
}

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    Row r = g.row(u);
    while (r != 0) {
      const int v = std::countr_zero(r);
      r &= r - 1;
      if ((g.row(u) & g.row(v)) != 0) return false;
    }
  }
  return true;
}

int codegree(const Graph& g, int x, int y) {
  check_vertex(g.order(), x);
  check_vertex(g.order(), y);
  if (x == y) throw DomainError("codegree needs two distinct vertices");
  return std::popcount(g.row(x) & g.row(y));
}

ThreeProfile three_profile(const Graph& g) {
  ThreeProfile p;
  p.n3 = count_triangles(g);
  std::int64_t cherries = 0;
  for (int v = 0; v < g.order(); ++v) cherries += choose2(g.degree(v));
  p.n2 = cherries - 3 * p.n3;
  const Row all = g.vertex_mask();
  for (const Edge& e : g.edges()) {
    const Row seen = g.row(e.u) | g.row(e.v) | (Row{1} << e.u) |
                     (Row{1} << e.v);
    p.n1 += std::popcount(all & ~seen);
  }
  p.n0 = choose3(g.order()) - p.n1 - p.n2 - p.n3;
  return p;
}

std::int64_t edit_distance(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) {
    throw DomainError("edit distance needs equal vertex counts");
  }
  std::int64_t twice = 0;
  for (int v = 0; v < g.order(); ++v) {
    twice += std::popcount(g.row(v) ^ h.row(v));
  }
  return twice / 2;
}

std::vector<int> bits_to_vertices(Row mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace trimin

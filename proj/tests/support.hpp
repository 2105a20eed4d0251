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

// Reference implementations for tests. Deliberately naive and independent
// of the library code paths they check.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "trimin/graph.hpp"

namespace oracle {

using trimin::Graph;

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::int64_t triangles(const Graph& g) {
  std::int64_t t = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) ++t;
  return t;
}

inline std::int64_t edges(const Graph& g) {
  std::int64_t m = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) m += g.has_edge(u, v) ? 1 : 0;
  return m;
}

/// Labeled graph from a bitmask over pairs (0,1),(0,2),(1,2),(0,3),...
inline Graph from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(u, v);
  return g;
}

/// Adjacency string under a relabeling; min over all permutations is a
/// canonical form that shares no code with the library.
inline std::string adjacency_key(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::string s(static_cast<std::size_t>(n * n), '0');
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
        s[static_cast<std::size_t>(u * n + v)] = '1';
  return s;
}

inline std::string brute_canonical(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::string k = adjacency_key(g, perm);
    if (first || k < best) {
      best = std::move(k);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(g.order()) + ":" + best;
}

/// For every e: minimum triangle count over all labeled (n,e)-graphs and the
/// set of brute-force canonical keys attaining it. n <= 6.
struct MinCell {
  std::int64_t min = -1;
  std::set<std::string> minimisers;
};

inline std::vector<MinCell> labeled_minima(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<MinCell> cells(static_cast<std::size_t>(pairs + 1));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Graph g = from_mask(n, mask);
    const std::int64_t t = triangles(g);
    MinCell& c = cells[static_cast<std::size_t>(edges(g))];
    if (c.min >= 0 && t > c.min) continue;
    if (c.min < 0 || t < c.min) {
      c.min = t;
      c.minimisers.clear();
    }
    c.minimisers.insert(brute_canonical(g));
  }
  return cells;
}

/// Number of isomorphism classes per edge count, from the labeled sweep.
inline std::vector<std::int64_t> labeled_class_counts(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::set<std::string>> by_e(static_cast<std::size_t>(pairs + 1));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Graph g = from_mask(n, mask);
    by_e[static_cast<std::size_t>(edges(g))].insert(brute_canonical(g));
  }
  std::vector<std::int64_t> out;
  for (const auto& s : by_e) out.push_back(static_cast<std::int64_t>(s.size()));
  return out;
}

/// Proper k-colouring by plain backtracking.
inline bool colorable(const Graph& g, int k) {
  std::vector<int> col(static_cast<std::size_t>(g.order()), -1);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == g.order()) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.has_edge(u, v) && col[static_cast<std::size_t>(u)] == c) ok = false;
      if (!ok) continue;
      col[static_cast<std::size_t>(v)] = c;
      if (self(self, v + 1)) return true;
    }
    col[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  return rec(rec, 0);
}

/// t_s(n) by maximising over all compositions would be slow; the product
/// formula over an explicitly balanced split is independent enough.
inline std::int64_t turan_edges(std::int64_t n, std::int64_t s) {
  std::vector<std::int64_t> parts(static_cast<std::size_t>(s), 0);
  for (std::int64_t v = 0; v < n; ++v) ++parts[static_cast<std::size_t>(v % s)];
  std::int64_t e = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) e += parts[i] * parts[j];
  return e;
}

inline std::int64_t k_index(std::int64_t n, std::int64_t e) {
  if (e == 0) return 1;
  std::int64_t s = 1;
  while (turan_edges(n, s) < e) ++s;
  return s;
}

/// h*(n,e) straight from the definition: scan a upward, Turán the rest.
inline std::int64_t h_star(std::int64_t n, std::int64_t e) {
  const std::int64_t k = k_index(n, e);
  if (k <= 2) return 0;
  std::int64_t a = 1;
  while (a * (n - a) + turan_edges(n - a, k - 1) < e) ++a;
  std::vector<std::int64_t> parts(static_cast<std::size_t>(k - 1), 0);
  for (std::int64_t v = 0; v < n - a; ++v) ++parts[static_cast<std::size_t>(v % (k - 1))];
  std::sort(parts.rbegin(), parts.rend());
  parts.push_back(a);
  std::int64_t full_e = 0, full_t = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      full_e += parts[i] * parts[j];
      for (std::size_t l = j + 1; l < parts.size(); ++l) full_t += parts[i] * parts[j] * parts[l];
    }
  const std::int64_t m = full_e - e;
  std::int64_t lead = 0;
  for (std::size_t i = 0; i + 2 < parts.size(); ++i) lead += parts[i];
  return full_t - m * lead;
}

}  // namespace oracle

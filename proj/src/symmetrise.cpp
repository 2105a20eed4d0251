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

#include "trimin/symmetrise.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "trimin/error.hpp"
#include "trimin/turan.hpp"

namespace trimin {

namespace {

enum class Fill { kEmpty, kPartial, kFull };

struct PartState {
  std::vector<int> vertices;  // sorted
  std::int64_t edges = 0;
  Fill fill = Fill::kEmpty;
  // Sides of the complete bipartite graph when full.
  std::vector<int> side0;
  std::vector<int> side1;
};

std::int64_t internal_edges(const Graph& g, const std::vector<int>& vs) {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.has_edge(vs[i], vs[j])) ++m;
    }
  }
  return m;
}

// Two-colouring of a complete bipartite G[vs]; vs[0] goes to side0.
void bipartition_of(const Graph& g, PartState& p) {
  const int root = p.vertices.front();
  p.side0.clear();
  p.side1.clear();
  for (const int v : p.vertices) {
    if (v == root || !g.has_edge(root, v)) {
      p.side0.push_back(v);
    } else {
      p.side1.push_back(v);
    }
  }
  if (p.side0.size() < p.side1.size()) std::swap(p.side0, p.side1);
}

// Balanced split by position, larger side first.
void balanced_split(PartState& p) {
  const std::size_t big = (p.vertices.size() + 1) / 2;
  p.side0.assign(p.vertices.begin(), p.vertices.begin() + static_cast<long>(big));
  p.side1.assign(p.vertices.begin() + static_cast<long>(big), p.vertices.end());
}

}  // namespace

SymmetriseResult symmetrise_h0(const Graph& g, const Partition& parts) {
  const int n = g.order();
  const std::int64_t e = g.edge_count();
  if (e < 1) throw DomainError("symmetrisation needs e >= 1");
  const int k = k_index(n, e);
  if (!is_h0_partition(g, parts, k)) {
    throw DomainError("witness partition is not an H0 partition with " +
                      std::to_string(k - 1) + " parts for this graph");
  }

  std::vector<PartState> state(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    PartState& p = state[j];
    p.vertices = parts[j];
    std::sort(p.vertices.begin(), p.vertices.end());
    p.edges = internal_edges(g, p.vertices);
    const std::int64_t cap = turan_edges(static_cast<std::int64_t>(p.vertices.size()), 2);
    if (p.edges == 0) {
      p.fill = Fill::kEmpty;
    } else if (p.edges == cap) {
      p.fill = Fill::kFull;
      bipartition_of(g, p);
    } else {
      p.fill = Fill::kPartial;
    }
  }

  // Steps 1-2: partially full parts become balanced bipartite graphs and
  // their edges are pooled into the largest parts first.
  std::vector<std::size_t> partial;
  std::int64_t pool = 0;
  for (std::size_t j = 0; j < state.size(); ++j) {
    if (state[j].fill == Fill::kPartial) {
      partial.push_back(j);
      pool += state[j].edges;
    }
  }
  std::stable_sort(partial.begin(), partial.end(), [&](std::size_t a, std::size_t b) {
    return state[a].vertices.size() > state[b].vertices.size();
  });
  for (const std::size_t j : partial) {
    PartState& p = state[j];
    const std::int64_t cap = turan_edges(static_cast<std::int64_t>(p.vertices.size()), 2);
    p.edges = std::min(cap, pool);
    pool -= p.edges;
    balanced_split(p);
    if (p.edges == 0) {
      p.fill = Fill::kEmpty;
    } else if (p.edges == cap) {
      p.fill = Fill::kFull;
    }
  }

  // Step 3.
  int b_index = -1;
  for (std::size_t j = 0; j < state.size() && b_index < 0; ++j) {
    if (state[j].fill == Fill::kPartial) b_index = static_cast<int>(j);
  }
  for (std::size_t j = 0; j < state.size() && b_index < 0; ++j) {
    if (state[j].fill == Fill::kFull) b_index = static_cast<int>(j);
  }
  if (b_index < 0) {
    throw DomainError("no part carries an edge; e must exceed t_{k-1}(n)");
  }
  const PartState& b = state[static_cast<std::size_t>(b_index)];

  // Step 4: the rest is complete partite; full parts contribute both sides.
  std::vector<std::vector<int>> a_parts;
  for (std::size_t j = 0; j < state.size(); ++j) {
    if (static_cast<int>(j) == b_index) continue;
    const PartState& p = state[j];
    if (p.fill == Fill::kFull) {
      a_parts.push_back(p.side0);
      a_parts.push_back(p.side1);
    } else {
      a_parts.push_back(p.vertices);
    }
  }
  std::stable_sort(a_parts.begin(), a_parts.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });

  // Step 5: scan a_t downward from floor(|B|/2).
  const std::int64_t size_b = static_cast<std::int64_t>(b.vertices.size());
  std::int64_t a_last = -1;
  for (std::int64_t at = size_b / 2; at >= 1; --at) {
    const std::int64_t aprev = size_b - at;
    if ((aprev + 1) * (at - 1) < b.edges && b.edges <= aprev * at) {
      a_last = at;
      break;
    }
  }
  if (a_last < 0) throw std::logic_error("step 5 found no split of B");
  std::vector<int> big_side;
  std::vector<int> small_side;
  if (b.fill == Fill::kFull) {
    big_side = b.side0;
    small_side = b.side1;
  } else {
    const auto cut = static_cast<long>(size_b - a_last);
    big_side.assign(b.vertices.begin(), b.vertices.begin() + cut);
    small_side.assign(b.vertices.begin() + cut, b.vertices.end());
  }
  const std::int64_t m_prime =
      static_cast<std::int64_t>(big_side.size()) *
          static_cast<std::int64_t>(small_side.size()) -
      b.edges;

  // Step 6.
  SymmetriseResult out;
  out.parts = a_parts;
  out.parts.push_back(big_side);
  out.parts.push_back(small_side);
  out.t = static_cast<int>(out.parts.size());
  out.b_index = b_index;
  out.m_prime = m_prime;
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < out.parts.size(); ++i) {
    for (const int v : out.parts[i]) part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  Graph h(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) {
        h.add_edge(u, v);
      }
    }
  }
  for (std::int64_t j = 0; j < m_prime; ++j) {
    h.remove_edge(small_side.front(), big_side[static_cast<std::size_t>(j)]);
  }
  out.graph = h;
  return out;
}

}  // namespace trimin

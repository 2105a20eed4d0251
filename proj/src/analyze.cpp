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

#include "trimin/analyze.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "trimin/error.hpp"
#include "trimin/extremal.hpp"

namespace trimin {

namespace {

Row bit(int v) { return Row{1} << v; }

// Part index per vertex; throws unless `parts` partitions V(g).
std::vector<int> part_index(const Graph& g, const Partition& parts) {
  std::vector<int> idx(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const int v : parts[i]) {
      if (v < 0 || v >= g.order()) {
        throw DomainError("partition names vertex " + std::to_string(v) +
                          " outside the graph");
      }
      if (idx[static_cast<std::size_t>(v)] != -1) {
        throw DomainError("vertex " + std::to_string(v) +
                          " appears in two parts");
      }
      idx[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (idx[static_cast<std::size_t>(v)] == -1) {
      throw DomainError("vertex " + std::to_string(v) + " is in no part");
    }
  }
  return idx;
}

std::vector<Row> part_masks(const Partition& parts) {
  std::vector<Row> masks;
  for (const auto& p : parts) {
    Row m = 0;
    for (const int v : p) m |= bit(v);
    masks.push_back(m);
  }
  return masks;
}

Partition parts_from_labels(int n, int k, const std::vector<int>& label) {
  Partition parts(static_cast<std::size_t>(k));
  for (int v = 0; v < n; ++v) {
    parts[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });
  return parts;
}

std::int64_t cut_of(const Graph& g, const std::vector<int>& label) {
  std::int64_t cut = 0;
  for (const Edge& ed : g.edges()) {
    if (label[static_cast<std::size_t>(ed.u)] != label[static_cast<std::size_t>(ed.v)]) {
      ++cut;
    }
  }
  return cut;
}

bool complete_between(const Graph& g, Row x, Row y) {
  for (Row m = x; m; m &= m - 1) {
    if ((g.row(std::countr_zero(m)) & y) != y) return false;
  }
  return true;
}

bool independent(const Graph& g, Row x) {
  for (Row m = x; m; m &= m - 1) {
    if (g.row(std::countr_zero(m)) & x) return false;
  }
  return true;
}

std::int64_t missing_between(const Graph& g, Row x, Row y) {
  std::int64_t miss = 0;
  for (Row m = x; m; m &= m - 1) {
    miss += std::popcount(y & ~g.row(std::countr_zero(m)));
  }
  return miss;
}

Rational gap_bound_value(std::int64_t ell, std::int64_t ell_k,
                         const std::vector<std::int64_t>& dev,
                         const std::vector<std::int64_t>& m_t, std::int64_t d) {
  const std::size_t k = dev.size();
  std::int64_t m = 0;
  for (const std::int64_t x : m_t) m += x;
  const Rational spread(ell - ell_k);
  Rational total = 0;
  for (std::size_t t = 0; t + 1 < k; ++t) {
    const std::int64_t head = dev[t] + dev[k - 1];
    BigInt sq = BigInt(head) * head;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (i != t) sq += BigInt(dev[i]) * dev[i];
    }
    total += Rational(m_t[t], m) * spread / 4 * Rational(sq);
  }
  return total - Rational(BigInt(12) * d * d) / spread;
}

// Shared hypotheses on F's part sizes and G's deviations.
void check_size_hypotheses(const std::vector<std::int64_t>& s,
                           const std::vector<std::int64_t>& ell,
                           std::vector<std::int64_t>& dev) {
  const std::size_t k = ell.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (ell[i] != ell[0]) {
      throw DomainError("hypothesis (iii) fails: the first k-1 parts of F differ in size");
    }
  }
  if (ell[0] <= ell[k - 1]) {
    throw DomainError("hypothesis (iii) fails: l must exceed l_k");
  }
  const std::int64_t spread = ell[0] - ell[k - 1];
  const std::int64_t k3 = 12 * static_cast<std::int64_t>(k * k * k);
  dev.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    dev[i] = s[i] - ell[i];
    if (std::abs(dev[i]) * k3 > spread) {
      throw DomainError("hypothesis (v) fails: |d_" + std::to_string(i + 1) +
                        "| exceeds (l - l_k)/(12k^3)");
    }
  }
  if (dev[k - 1] < 0) throw DomainError("hypothesis (v) fails: d_k < 0");
}

}  // namespace

PartitionAnalysis analyze_partition(const Graph& g, const Partition& parts,
                                    double z_threshold) {
  const std::vector<int> idx = part_index(g, parts);
  const std::vector<Row> masks = part_masks(parts);
  PartitionAnalysis a;
  a.parts = parts;
  a.z_threshold = z_threshold;
  const int n = g.order();
  for (const Edge& ed : g.edges()) {
    if (idx[static_cast<std::size_t>(ed.u)] == idx[static_cast<std::size_t>(ed.v)]) {
      ++a.bad;
    } else {
      ++a.cut_edges;
    }
  }
  for (int v = 0; v < n; ++v) {
    const Row own = masks[static_cast<std::size_t>(idx[static_cast<std::size_t>(v)])];
    const Row outside = g.vertex_mask() & ~own;
    const std::int64_t dm = std::popcount(outside & ~g.row(v));
    a.missing_degrees.push_back(dm);
    if (static_cast<double>(dm) >= z_threshold * n) a.z.push_back(v);
  }
  if (!masks.empty()) {
    const Row last = masks.back();
    for (std::size_t i = 0; i + 1 < masks.size(); ++i) {
      a.missing.push_back(missing_between(g, masks[i], last));
    }
  }
  return a;
}

PartitionAnalysis max_cut_partition(const Graph& g, int k, CutMode mode,
                                    double z_threshold, std::uint64_t seed) {
  const int n = g.order();
  if (k < 1) throw DomainError("max-cut needs k >= 1");
  std::vector<int> best_label(static_cast<std::size_t>(n), 0);
  if (mode == CutMode::kExact) {
    if (std::pow(static_cast<double>(k), n) > kMaxExactCutStates) {
      throw DomainError("exact max-cut needs k^n <= 1e8; use the heuristic mode");
    }
    // remaining[v]: edges with their later endpoint at v or beyond.
    std::vector<std::int64_t> remaining(static_cast<std::size_t>(n + 1), 0);
    for (int v = n - 1; v >= 0; --v) {
      remaining[static_cast<std::size_t>(v)] =
          remaining[static_cast<std::size_t>(v + 1)] +
          std::popcount(g.row(v) & (bit(v) - 1));
    }
    std::vector<Row> classes(static_cast<std::size_t>(k), 0);
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::int64_t best = -1;
    const int need = std::min(k, n);
    auto rec = [&](auto&& self, int v, int used, std::int64_t cut) -> void {
      if (cut + remaining[static_cast<std::size_t>(v)] <= best) return;
      if (used + (n - v) < need) return;
      if (v == n) {
        best = cut;
        best_label = label;
        return;
      }
      const Row before = g.row(v) & (bit(v) - 1);
      for (int p = 0; p < std::min(used + 1, k); ++p) {
        const std::int64_t gain = std::popcount(before) -
                                  std::popcount(before & classes[static_cast<std::size_t>(p)]);
        classes[static_cast<std::size_t>(p)] |= bit(v);
        label[static_cast<std::size_t>(v)] = p;
        self(self, v + 1, std::max(used, p + 1), cut + gain);
        classes[static_cast<std::size_t>(p)] &= ~bit(v);
      }
    };
    rec(rec, 0, 0, 0);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, k - 1);
    std::int64_t best = -1;
    for (int restart = 0; restart < 8; ++restart) {
      std::vector<int> label(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        label[static_cast<std::size_t>(v)] = restart == 0 ? v % k : pick(rng);
      }
      bool improved = true;
      while (improved) {
        improved = false;
        for (int v = 0; v < n; ++v) {
          std::vector<int> into(static_cast<std::size_t>(k), 0);
          for (Row m = g.row(v); m; m &= m - 1) {
            ++into[static_cast<std::size_t>(label[static_cast<std::size_t>(std::countr_zero(m))])];
          }
          const int own = label[static_cast<std::size_t>(v)];
          int target = own;
          for (int q = 0; q < k; ++q) {
            if (into[static_cast<std::size_t>(q)] < into[static_cast<std::size_t>(target)]) target = q;
          }
          if (target != own) {
            label[static_cast<std::size_t>(v)] = target;
            improved = true;
          }
        }
      }
      const std::int64_t cut = cut_of(g, label);
      if (cut > best) {
        best = cut;
        best_label = label;
      }
    }
  }
  return analyze_partition(g, parts_from_labels(n, k, best_label), z_threshold);
}

PropertyFlags check_partition_properties(const Graph& g, const Partition& parts,
                                         double beta, double gamma1,
                                         double gamma2, double delta, double c) {
  const std::vector<int> idx = part_index(g, parts);
  const std::vector<Row> masks = part_masks(parts);
  const int k = static_cast<int>(parts.size());
  const double n = g.order();
  if (k < 1) throw DomainError("partition has no parts");
  const PartitionAnalysis a = analyze_partition(g, parts, gamma1);
  PropertyFlags f;
  f.u = a.z;
  Row u_mask = 0;
  for (const int v : f.u) u_mask |= bit(v);

  f.p1 = true;
  for (int i = 0; i < k; ++i) {
    const double target = i + 1 < k ? c * n : (1.0 - (k - 1) * c) * n;
    if (std::abs(static_cast<double>(parts[static_cast<std::size_t>(i)].size()) - target) >
        beta * n) {
      f.p1 = false;
    }
  }

  f.p2 = true;
  for (int i = 0; i + 1 < k && f.p2; ++i) {
    for (int j = i + 1; j + 1 < k && f.p2; ++j) {
      f.p2 = complete_between(g, masks[static_cast<std::size_t>(i)],
                              masks[static_cast<std::size_t>(j)]);
    }
  }

  f.p3 = static_cast<double>(f.u.size()) <= delta * n;
  for (const Edge& ed : g.edges()) {
    if (idx[static_cast<std::size_t>(ed.u)] == idx[static_cast<std::size_t>(ed.v)] &&
        !((u_mask >> ed.u) & 1U) && !((u_mask >> ed.v) & 1U)) {
      f.p3 = false;
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    const Row own = masks[static_cast<std::size_t>(idx[static_cast<std::size_t>(v)])];
    if (static_cast<double>(std::popcount(g.row(v) & own)) > delta * n) f.p3 = false;
  }

  // Each y in U ∩ V_k needs some i < k with y complete to every other V_j,
  // j < k. The choice per vertex is independent, so no search is needed.
  f.p4 = true;
  const Row last = masks.back();
  for (Row m = u_mask & last; m && k >= 2; m &= m - 1) {
    const int y = std::countr_zero(m);
    int incomplete = 0;
    for (int j = 0; j + 1 < k; ++j) {
      const Row mj = masks[static_cast<std::size_t>(j)];
      if ((g.row(y) & mj) != mj) ++incomplete;
    }
    if (incomplete > 1) f.p4 = false;
  }

  f.p5 = true;
  for (int v = 0; v < g.order(); ++v) {
    const double dm = static_cast<double>(a.missing_degrees[static_cast<std::size_t>(v)]);
    const bool in_u = (u_mask >> v) & 1U;
    if (in_u ? dm < gamma1 * n : dm >= gamma2 * n) f.p5 = false;
  }
  return f;
}

GapBoundResult kpartite_gap_bound(const Graph& g, const Partition& a,
                                  const Graph& f, const Partition& b,
                                  std::int64_t d) {
  const int n = g.order();
  const std::size_t k = a.size();
  if (f.order() != n) throw DomainError("G and F must have the same order");
  if (k < 3 || static_cast<std::size_t>(n) < k) {
    throw DomainError("the comparison needs n >= k >= 3");
  }
  if (d <= 0) throw DomainError("the comparison needs d > 0");
  if (b.size() != k) throw DomainError("hypothesis (iii) fails: F needs k parts");
  if (g.edge_count() != f.edge_count()) throw DomainError("e(G) != e(F)");
  part_index(g, a);
  part_index(f, b);
  const std::vector<Row> am = part_masks(a);
  const std::vector<Row> bm = part_masks(b);
  for (std::size_t i = 0; i < k; ++i) {
    if (!independent(g, am[i])) {
      throw DomainError("hypothesis (i) fails: A_" + std::to_string(i + 1) +
                        " is not independent in G");
    }
    if (!independent(f, bm[i])) {
      throw DomainError("hypothesis (iii) fails: B_" + std::to_string(i + 1) +
                        " is not independent in F");
    }
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = i + 1; j + 1 < k; ++j) {
      if (!complete_between(g, am[i], am[j])) {
        throw DomainError("hypothesis (ii) fails: G[A_" + std::to_string(i + 1) +
                          ",A_" + std::to_string(j + 1) + "] is not complete");
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (i == k - 2 && j == k - 1) continue;
      if (!complete_between(f, bm[i], bm[j])) {
        throw DomainError("hypothesis (iv) fails: F[B_" + std::to_string(i + 1) +
                          ",B_" + std::to_string(j + 1) + "] is not complete");
      }
    }
  }
  if (missing_between(f, bm[k - 2], bm[k - 1]) > d) {
    throw DomainError("hypothesis (iv) fails: more than d edges missing in F");
  }
  std::vector<std::int64_t> s;
  std::vector<std::int64_t> ell;
  for (std::size_t i = 0; i < k; ++i) {
    s.push_back(static_cast<std::int64_t>(a[i].size()));
    ell.push_back(static_cast<std::int64_t>(b[i].size()));
  }
  std::vector<std::int64_t> dev;
  check_size_hypotheses(s, ell, dev);
  std::vector<std::int64_t> m_t;
  std::int64_t m = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    m_t.push_back(missing_between(g, am[i], am[k - 1]));
    m += m_t.back();
  }
  if (m <= 0) throw DomainError("the comparison needs m > 0");
  GapBoundResult r;
  r.bound = gap_bound_value(ell[0], ell[k - 1], dev, m_t, d);
  r.difference = Rational(count_triangles(g) - count_triangles(f));
  r.holds = r.difference >= r.bound;
  return r;
}

GapBoundResult kpartite_gap_bound(const KPartiteShape& g,
                                  const std::vector<std::int64_t>& f_sizes,
                                  std::int64_t f_missing, std::int64_t d) {
  const std::size_t k = g.sizes.size();
  if (k < 3 || f_sizes.size() != k) {
    throw DomainError("the comparison needs k >= 3 parts on both sides");
  }
  const std::int64_t n = std::accumulate(g.sizes.begin(), g.sizes.end(), std::int64_t{0});
  if (n != std::accumulate(f_sizes.begin(), f_sizes.end(), std::int64_t{0})) {
    throw DomainError("G and F must have the same order");
  }
  if (d <= 0) throw DomainError("the comparison needs d > 0");
  if (f_missing < 0 || f_missing > d) {
    throw DomainError("hypothesis (iv) fails: F misses more than d edges");
  }
  if (static_cast<std::int64_t>(g.last_part_missing.size()) != g.sizes.back()) {
    throw DomainError("one missing-count row is needed per vertex of A_k");
  }
  std::vector<std::int64_t> m_t(k - 1, 0);
  for (const auto& row : g.last_part_missing) {
    if (row.size() != k - 1) throw DomainError("missing-count rows need k-1 entries");
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (row[i] < 0 || row[i] > g.sizes[i]) {
        throw DomainError("missing count outside [0, |A_i|]");
      }
      m_t[i] += row[i];
    }
  }
  const std::int64_t m = std::accumulate(m_t.begin(), m_t.end(), std::int64_t{0});
  if (multipartite_edges(g.sizes) - m != multipartite_edges(f_sizes) - f_missing) {
    throw DomainError("e(G) != e(F)");
  }
  std::vector<std::int64_t> dev;
  check_size_hypotheses(g.sizes, f_sizes, dev);
  if (m <= 0) throw DomainError("the comparison needs m > 0");

  // Triangles avoiding A_k plus, per x in A_k, pairs of neighbours in two
  // different head parts.
  BigInt k3g = multipartite_triangles(std::span(g.sizes).first(k - 1));
  for (const auto& row : g.last_part_missing) {
    BigInt e1 = 0;
    BigInt e2 = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const BigInt deg = g.sizes[i] - row[i];
      e2 += e1 * deg;
      e1 += deg;
    }
    k3g += e2;
  }
  std::int64_t head = 0;
  for (std::size_t i = 0; i + 2 < k; ++i) head += f_sizes[i];
  const BigInt k3f = BigInt(multipartite_triangles(f_sizes)) - BigInt(f_missing) * head;
  GapBoundResult r;
  r.bound = gap_bound_value(f_sizes[0], f_sizes[k - 1], dev, m_t, d);
  r.difference = Rational(k3g - k3f);
  r.holds = r.difference >= r.bound;
  return r;
}

GapInstance random_gap_instance(std::mt19937_64& rng, int max_n) {
  if (max_n < 4) throw DomainError("gap instances need max_n >= 4");
  auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  // (k-1) l + l_k <= max_n with l > l_k >= 1.
  const int k_max = std::max(3, std::min(6, (max_n + 1) / 2));
  int k = 3;
  std::int64_t ell_k = 1;
  std::int64_t ell = 2;
  for (;;) {
    k = static_cast<int>(uniform(3, k_max));
    ell_k = uniform(1, std::max<std::int64_t>(1, max_n / k));
    const std::int64_t ell_max = (max_n - ell_k) / (k - 1);
    if (ell_max <= ell_k) continue;
    ell = uniform(ell_k + 1, ell_max);
    break;
  }
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(k - 1), ell);
  sizes.push_back(ell_k);
  const Graph base = complete_multipartite(sizes);
  Partition parts;
  int v = 0;
  for (const std::int64_t s : sizes) {
    std::vector<int> part;
    for (std::int64_t j = 0; j < s; ++j) part.push_back(v++);
    parts.push_back(part);
  }
  // With |d_i| capped below 1 every deviation is 0, so m = d0.
  const std::int64_t m = uniform(1, ell * ell_k);
  GapInstance inst;
  inst.a = parts;
  inst.b = parts;
  inst.d = m + uniform(0, 4);
  inst.f = base;
  std::vector<Edge> last_pair;
  for (const int x : parts[static_cast<std::size_t>(k - 2)]) {
    for (const int y : parts[static_cast<std::size_t>(k - 1)]) last_pair.push_back({x, y});
  }
  std::shuffle(last_pair.begin(), last_pair.end(), rng);
  for (std::int64_t j = 0; j < m; ++j) {
    inst.f.remove_edge(last_pair[static_cast<std::size_t>(j)].u,
                       last_pair[static_cast<std::size_t>(j)].v);
  }
  inst.g = base;
  std::vector<Edge> to_last;
  for (int i = 0; i + 1 < k; ++i) {
    for (const int x : parts[static_cast<std::size_t>(i)]) {
      for (const int y : parts[static_cast<std::size_t>(k - 1)]) to_last.push_back({x, y});
    }
  }
  std::shuffle(to_last.begin(), to_last.end(), rng);
  for (std::int64_t j = 0; j < m; ++j) {
    inst.g.remove_edge(to_last[static_cast<std::size_t>(j)].u,
                       to_last[static_cast<std::size_t>(j)].v);
  }
  return inst;
}

GapShapeInstance random_gap_shape(std::mt19937_64& rng) {
  auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const std::int64_t k = uniform(3, 4);
  const std::int64_t k3 = k * k * k;
  const std::int64_t spread = uniform(24 * k3, 40 * k3);
  const std::int64_t ell_k = uniform(1, 60);
  const std::int64_t ell = ell_k + spread;
  const std::int64_t cap = spread / (12 * k3);
  GapShapeInstance inst;
  inst.f_sizes.assign(static_cast<std::size_t>(k - 1), ell);
  inst.f_sizes.push_back(ell_k);
  // Deviations summing to zero with d_k >= 0 and every |d_i| <= cap.
  std::vector<std::int64_t> dev;
  for (;;) {
    dev.assign(static_cast<std::size_t>(k), 0);
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i + 1 < k; ++i) {
      dev[static_cast<std::size_t>(i)] = uniform(-cap, cap);
      sum += dev[static_cast<std::size_t>(i)];
    }
    dev.back() = -sum;
    if (dev.back() >= 0 && dev.back() <= cap) break;
  }
  for (std::size_t i = 0; i < dev.size(); ++i) {
    inst.g.sizes.push_back(inst.f_sizes[i] + dev[i]);
  }
  // e(G) = e(F) forces m = m' + d0 with m' the complete-graph difference.
  const std::int64_t m_prime =
      multipartite_edges(inst.g.sizes) - multipartite_edges(inst.f_sizes);
  const std::int64_t d0_lo = std::max<std::int64_t>(0, 1 - m_prime);
  const std::int64_t d0 = uniform(d0_lo, d0_lo + 3 * ell_k);
  inst.f_missing = d0;
  inst.d = d0 + uniform(0, 5) + (d0 == 0 ? 1 : 0);
  std::int64_t m = m_prime + d0;
  const std::int64_t s_k = inst.g.sizes.back();
  inst.g.last_part_missing.assign(static_cast<std::size_t>(s_k),
                                  std::vector<std::int64_t>(static_cast<std::size_t>(k - 1), 0));
  // Spread m missing pairs at random over (x, i) cells, respecting |A_i|.
  while (m > 0) {
    const auto x = static_cast<std::size_t>(uniform(0, s_k - 1));
    const auto i = static_cast<std::size_t>(uniform(0, k - 2));
    auto& cell = inst.g.last_part_missing[x][i];
    if (cell >= inst.g.sizes[i]) continue;
    const std::int64_t take = std::min({m, inst.g.sizes[i] - cell, uniform(1, 8)});
    cell += take;
    m -= take;
  }
  return inst;
}

IdentityCheck ls_identities(const Graph& g) {
  const std::int64_t n = g.order();
  const std::int64_t e = g.edge_count();
  const ThreeProfile p = three_profile(g);
  IdentityCheck out;
  out.triple_ok = e * (n - 2) == 3 * p.n3 + 2 * p.n2 + p.n1;
  if (2 * e >= n * n) return out;
  const Rational nn(n);
  const Rational s = nn * nn / (nn * nn - 2 * Rational(e));
  const Rational choose_s3 = s * (s - 1) * (s - 2) / 6;
  const Rational ratio = nn / s;
  Rational q_sum = 0;
  const Rational mean = Rational(2 * e) / nn;
  for (int v = 0; v < g.order(); ++v) {
    const Rational q = mean - g.degree(v);
    q_sum += q * q;
  }
  const Rational rhs = choose_s3 * ratio * ratio * ratio + (q_sum + p.n1) / 3;
  out.s_identity_ok = rhs == Rational(p.n3);
  return out;
}

}  // namespace trimin

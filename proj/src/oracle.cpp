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

#include "trimin/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <unordered_set>

#include "trimin/enumerate.hpp"
#include "trimin/error.hpp"
#include "trimin/extremal.hpp"
#include "trimin/families.hpp"
#include "trimin/graph6.hpp"
#include "trimin/turan.hpp"

namespace trimin {

namespace {

OracleResult minimise_level(int n, std::int64_t e,
                            const std::vector<CanonicalForm>& level) {
  OracleResult r;
  r.n = n;
  r.e = e;
  r.classes_scanned = static_cast<std::int64_t>(level.size());
  r.g3_min = std::numeric_limits<std::int64_t>::max();
  for (const CanonicalForm& f : level) {
    const std::int64_t t = count_triangles(unpack(f));
    if (t < r.g3_min) {
      r.g3_min = t;
      r.extremal.clear();
    }
    if (t == r.g3_min) r.extremal.push_back(f);
  }
  return r;
}

void check_edges(int n, std::int64_t e) {
  if (e < 0 || e > choose2(n)) {
    throw DomainError("edge count " + std::to_string(e) + " outside [0," +
                      std::to_string(choose2(n)) + "]");
  }
}

}  // namespace

OracleResult g3_bruteforce(int n, std::int64_t e, const OracleOptions& opts) {
  check_enumeration_bounds(n, opts.allow_large);
  check_edges(n, e);
  const std::int64_t cap = h_of(n, e);
  EnumerationOptions eo;
  eo.allow_large = opts.allow_large;
  eo.jobs = opts.jobs;
  eo.keep = [cap](const Graph& g) { return count_triangles(g) <= cap; };
  const auto levels = classes_by_edges(n, e, eo);
  return minimise_level(n, e, levels[static_cast<std::size_t>(e)]);
}

std::vector<OracleResult> g3_sweep(int n, const OracleOptions& opts) {
  EnumerationOptions eo;
  eo.allow_large = opts.allow_large;
  eo.jobs = opts.jobs;
  const auto levels = classes_by_edges(n, choose2(n), eo);
  std::vector<OracleResult> out;
  for (std::size_t e = 0; e < levels.size(); ++e) {
    out.push_back(minimise_level(n, static_cast<std::int64_t>(e), levels[e]));
  }
  return out;
}

bool ConjectureReport::passed() const {
  return std::all_of(cells.begin(), cells.end(), [](const ConjectureCell& c) {
    return c.value_ok && c.set_ok;
  });
}

ConjectureReport verify_conjecture(const std::vector<OracleResult>& sweep) {
  ConjectureReport report;
  if (sweep.empty()) return report;
  report.n = sweep.front().n;
  for (const OracleResult& r : sweep) {
    if (r.e < 1) continue;
    ConjectureCell cell;
    cell.e = r.e;
    cell.g3_min = r.g3_min;
    cell.h_star = h_of(r.n, r.e);
    cell.value_ok = cell.g3_min == cell.h_star;
    std::set<CanonicalForm> fam;
    for (const FamilyId f : {FamilyId::kH0star, FamilyId::kH2star}) {
      for (const CanonicalForm& c : enumerate_family(r.n, r.e, f)) fam.insert(c);
    }
    const std::set<CanonicalForm> ext(r.extremal.begin(), r.extremal.end());
    cell.oracle_count = ext.size();
    cell.family_count = fam.size();
    for (const CanonicalForm& c : ext) {
      if (!fam.contains(c)) cell.only_oracle.push_back(to_graph6(unpack(c)));
    }
    for (const CanonicalForm& c : fam) {
      if (!ext.contains(c)) cell.only_family.push_back(to_graph6(unpack(c)));
    }
    cell.set_ok = cell.only_oracle.empty() && cell.only_family.empty();
    report.cells.push_back(std::move(cell));
  }
  return report;
}

ConjectureReport verify_conjecture(int n, const OracleOptions& opts) {
  if (n > kMaxFamilyEnumerationOrder) {
    throw UnsupportedError("conjecture verification supports n <= 9");
  }
  return verify_conjecture(g3_sweep(n, opts));
}

OracleResult kpartite_min(int n, std::int64_t e, int k) {
  if (n < 1 || n > kMaxCanonicalOrder) {
    throw UnsupportedError("kpartite_min supports 1 <= n <= 10");
  }
  check_edges(n, e);
  if (k != k_index(n, e)) {
    throw DomainError("k mismatch: k_index(" + std::to_string(n) + "," +
                      std::to_string(e) + ") = " +
                      std::to_string(k_index(n, e)) + ", got " +
                      std::to_string(k));
  }
  // Complete k-partite graphs with at least e edges, bucketed by size.
  std::vector<std::vector<CanonicalForm>> seeds(
      static_cast<std::size_t>(choose2(n) + 1));
  std::vector<std::int64_t> sizes;
  auto parts = [&](auto&& self, std::int64_t left, std::int64_t cap) -> void {
    if (static_cast<int>(sizes.size()) == k) {
      if (left != 0) return;
      const std::int64_t m = multipartite_edges(sizes);
      if (m >= e) {
        seeds[static_cast<std::size_t>(m)].push_back(
            canonical_form(complete_multipartite(sizes)));
      }
      return;
    }
    for (std::int64_t a = std::min(cap, left); a >= 1; --a) {
      sizes.push_back(a);
      self(self, left - a, a);
      sizes.pop_back();
    }
  };
  parts(parts, n, n);
  std::int64_t top = e;
  for (std::int64_t m = e; m < static_cast<std::int64_t>(seeds.size()); ++m) {
    if (!seeds[static_cast<std::size_t>(m)].empty()) top = m;
  }
  std::unordered_set<CanonicalForm, CanonicalFormHash> level;
  for (std::int64_t m = top; m >= e; --m) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> next(
        seeds[static_cast<std::size_t>(m)].begin(),
        seeds[static_cast<std::size_t>(m)].end());
    for (const CanonicalForm& f : level) {
      const Graph g = unpack(f);
      for (const Edge& ed : g.edges()) {
        Graph child = g;
        child.remove_edge(ed.u, ed.v);
        next.insert(canonical_form(child));
      }
    }
    level.swap(next);
  }
  std::vector<CanonicalForm> sorted(level.begin(), level.end());
  std::sort(sorted.begin(), sorted.end());
  OracleResult r = minimise_level(n, e, sorted);
  if (sorted.empty()) r.g3_min = 0;
  return r;
}

LocalSearchResult local_search_upper(int n, std::int64_t e, int restarts,
                                     std::int64_t budget, std::uint64_t seed,
                                     bool start_at_h_star) {
  if (n < 1 || n > Graph::kMaxOrder) {
    throw DomainError("local search needs 1 <= n <= 64");
  }
  check_edges(n, e);
  if (restarts < 1 || budget < 0) {
    throw DomainError("local search needs restarts >= 1 and budget >= 0");
  }
  std::mt19937_64 rng(seed);
  LocalSearchResult best;
  best.best = std::numeric_limits<std::int64_t>::max();
  std::vector<Edge> all;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) all.push_back({u, v});
  }
  for (int r = 0; r < restarts; ++r) {
    Graph g(n);
    if (r == 0 && start_at_h_star) {
      g = build_h_star(n, e);
    } else {
      std::vector<Edge> pick = all;
      std::shuffle(pick.begin(), pick.end(), rng);
      for (std::int64_t j = 0; j < e; ++j) {
        g.add_edge(pick[static_cast<std::size_t>(j)].u,
                   pick[static_cast<std::size_t>(j)].v);
      }
    }
    std::vector<Edge> present;
    std::vector<Edge> absent;
    for (const Edge& ed : all) {
      (g.has_edge(ed.u, ed.v) ? present : absent).push_back(ed);
    }
    std::int64_t cur = count_triangles(g);
    if (cur < best.best) {
      best.best = cur;
      best.witness = g;
    }
    if (present.empty() || absent.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick_present(0, present.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_absent(0, absent.size() - 1);
    std::bernoulli_distribution coin(0.5);
    for (std::int64_t step = 0; step < budget; ++step) {
      const std::size_t i = pick_present(rng);
      const std::size_t j = pick_absent(rng);
      const Edge out = present[i];
      const Edge in = absent[j];
      g.remove_edge(out.u, out.v);
      const std::int64_t lost = codegree(g, out.u, out.v);
      const std::int64_t gained = codegree(g, in.u, in.v);
      const std::int64_t delta = gained - lost;
      if (delta < 0 || (delta == 0 && coin(rng))) {
        g.add_edge(in.u, in.v);
        present[i] = in;
        absent[j] = out;
        cur += delta;
        if (cur < best.best) {
          best.best = cur;
          best.witness = g;
        }
      } else {
        g.add_edge(out.u, out.v);
      }
    }
  }
  return best;
}

}  // namespace trimin

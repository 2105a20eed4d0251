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

#include "trimin/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <unordered_set>

#include "trimin/error.hpp"

namespace trimin {

namespace {

using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

void extend_range(const std::vector<CanonicalForm>& parents, std::size_t begin,
                  std::size_t end, const EnumerationOptions& opts,
                  FormSet& out) {
  for (std::size_t p = begin; p < end; ++p) {
    const Graph g = unpack(parents[p]);
    const int n = g.order();
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) {
        if (g.has_edge(u, v)) continue;
        Graph child = g;
        child.add_edge(u, v);
        if (opts.keep && !opts.keep(child)) continue;
        out.insert(canonical_form(child));
      }
    }
  }
}

std::vector<CanonicalForm> next_level(const std::vector<CanonicalForm>& parents,
                                      const EnumerationOptions& opts) {
  const int jobs = std::max(1, opts.jobs);
  std::vector<FormSet> partial(static_cast<std::size_t>(jobs));
  if (jobs == 1 || parents.size() < 64) {
    extend_range(parents, 0, parents.size(), opts, partial[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (parents.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const std::size_t begin = std::min(parents.size(), chunk * j);
      const std::size_t end = std::min(parents.size(), begin + chunk);
      pool.emplace_back(extend_range, std::cref(parents), begin, end,
                        std::cref(opts), std::ref(partial[j]));
    }
    for (auto& t : pool) t.join();
  }
  for (std::size_t j = 1; j < partial.size(); ++j) {
    partial[0].merge(partial[j]);
  }
  std::vector<CanonicalForm> level(partial[0].begin(), partial[0].end());
  std::sort(level.begin(), level.end());
  return level;
}

}  // namespace

void check_enumeration_bounds(int n, bool allow_large) {
  if (n < 1) throw DomainError("order must be positive");
  if (n <= kMaxRoutineEnumerationOrder) return;
  if (n == kMaxCanonicalOrder && allow_large) return;
  if (n == kMaxCanonicalOrder) {
    throw UnsupportedError(
        "n = 10 has 12005168 isomorphism classes (estimated hours and several "
        "GB of memory); pass the long-running flag to proceed");
  }
  throw UnsupportedError("exhaustive enumeration supports n <= 10, got " +
                         std::to_string(n));
}

std::vector<std::vector<CanonicalForm>> classes_by_edges(
    int n, std::int64_t max_edges, const EnumerationOptions& opts) {
  check_enumeration_bounds(n, opts.allow_large);
  max_edges = std::min<std::int64_t>(max_edges, choose2(n));
  std::vector<std::vector<CanonicalForm>> levels;
  const Graph empty(n);
  if (opts.keep && !opts.keep(empty)) {
    levels.resize(static_cast<std::size_t>(std::max<std::int64_t>(0, max_edges + 1)));
    return levels;
  }
  levels.push_back({canonical_form(empty)});
  for (std::int64_t e = 1; e <= max_edges; ++e) {
    levels.push_back(next_level(levels.back(), opts));
  }
  return levels;
}

std::vector<Graph> enumerate_graphs(int n, std::int64_t e,
                                    const EnumerationOptions& opts) {
  check_enumeration_bounds(n, opts.allow_large);
  if (e < 0 || e > choose2(n)) {
    throw DomainError("edge count " + std::to_string(e) + " outside [0," +
                      std::to_string(choose2(n)) + "]");
  }
  // Complements are cheaper past the midpoint, but only when no filter ties
  // the search to edge insertion.
  const bool flip = !opts.keep && 2 * e > choose2(n);
  const std::int64_t target = flip ? choose2(n) - e : e;
  const auto levels = classes_by_edges(n, target, opts);
  std::vector<Graph> out;
  if (static_cast<std::int64_t>(levels.size()) <= target) return out;
  for (const CanonicalForm& f : levels[static_cast<std::size_t>(target)]) {
    Graph g = unpack(f);
    out.push_back(flip ? unpack(canonical_form(g.complement())) : g);
  }
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("TRIMIN_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

}  // namespace trimin

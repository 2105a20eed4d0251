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

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "support.hpp"
#include "trimin/canonical.hpp"
#include "trimin/curves.hpp"
#include "trimin/enumerate.hpp"
#include "trimin/error.hpp"
#include "trimin/extremal.hpp"
#include "trimin/families.hpp"
#include "trimin/oracle.hpp"
#include "trimin/turan.hpp"

using namespace trimin;

namespace {

std::set<std::string> keys_of(const std::vector<CanonicalForm>& forms) {
  std::set<std::string> out;
  for (const CanonicalForm& f : forms) out.insert(oracle::brute_canonical(unpack(f)));
  return out;
}

}  // namespace

TEST(Enumeration, Examples) {
  EXPECT_EQ(enumerate_graphs(4, 3).size(), 3U);
  EXPECT_EQ(enumerate_graphs(5, 10).size(), 1U);
  std::int64_t total = 0;
  for (const auto& level : classes_by_edges(8, choose2(8))) total += static_cast<std::int64_t>(level.size());
  EXPECT_EQ(total, 12346);
}

TEST(Enumeration, TotalsMatchPublishedCounts) {
  // Order 0 is outside the library's domain.
  const std::int64_t want[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) {
    std::int64_t total = 0;
    for (const auto& level : classes_by_edges(n, choose2(n))) total += static_cast<std::int64_t>(level.size());
    ASSERT_EQ(total, want[n]) << n;
  }
}

TEST(Enumeration, PerEdgeCountsMatchLabeledSweep) {
  for (int n = 1; n <= 6; ++n) {
    const auto want = oracle::labeled_class_counts(n);
    const auto levels = classes_by_edges(n, choose2(n));
    ASSERT_EQ(levels.size(), want.size());
    for (std::size_t e = 0; e < want.size(); ++e) {
      ASSERT_EQ(static_cast<std::int64_t>(levels[e].size()), want[e]) << n << "," << e;
      ASSERT_EQ(keys_of(levels[e]).size(), levels[e].size());
    }
  }
}

TEST(Enumeration, ThreadCountDoesNotChangeResult) {
  EnumerationOptions one, four;
  four.jobs = 4;
  EXPECT_EQ(classes_by_edges(7, 21, one), classes_by_edges(7, 21, four));
}

TEST(Enumeration, FilterMustBeHereditary) {
  // Triangle-free classes on 6 vertices by edge count, against the sweep.
  EnumerationOptions tf;
  tf.keep = [](const Graph& g) { return is_triangle_free(g); };
  for (std::int64_t e = 0; e <= 9; ++e) {
    std::set<std::string> want;
    for (std::uint64_t mask = 0; mask < (1U << 15); ++mask) {
      const Graph g = oracle::from_mask(6, mask);
      if (g.edge_count() == e && oracle::triangles(g) == 0) want.insert(oracle::brute_canonical(g));
    }
    std::set<std::string> got;
    for (const Graph& g : enumerate_graphs(6, e, tf)) got.insert(oracle::brute_canonical(g));
    ASSERT_EQ(got, want) << e;
  }
}

TEST(Enumeration, Bounds) {
  EXPECT_THROW(check_enumeration_bounds(10, false), UnsupportedError);
  EXPECT_NO_THROW(check_enumeration_bounds(10, true));
  EXPECT_THROW(check_enumeration_bounds(11, true), UnsupportedError);
  try {
    check_enumeration_bounds(10, false);
  } catch (const UnsupportedError& e) {
    EXPECT_NE(std::string(e.what()).find("12005168"), std::string::npos);
  }
}

TEST(DefaultJobs, ReadsEnvironment) {
  ::setenv("TRIMIN_JOBS", "3", 1);
  EXPECT_EQ(default_jobs(), 3);
  ::unsetenv("TRIMIN_JOBS");
  EXPECT_EQ(default_jobs(), 1);
}

TEST(Bruteforce, Examples) {
  EXPECT_EQ(g3_bruteforce(5, 9).g3_min, 7);
  const OracleResult r = g3_bruteforce(4, 5);
  EXPECT_EQ(r.g3_min, 2);
  Graph k4m = Graph::complete(4);
  k4m.remove_edge(0, 1);
  EXPECT_EQ(r.extremal, std::vector<CanonicalForm>{canonical_form(k4m)});
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(g3_bruteforce(n, turan_edges(n, 2)).g3_min, 0);
}

TEST(Bruteforce, MatchesLabeledSweep) {
  for (int n = 1; n <= 6; ++n) {
    const auto cells = oracle::labeled_minima(n);
    for (std::int64_t e = 0; e <= choose2(n); ++e) {
      const OracleResult r = g3_bruteforce(n, e);
      const auto& c = cells[static_cast<std::size_t>(e)];
      ASSERT_EQ(r.g3_min, c.min) << n << "," << e;
      ASSERT_EQ(keys_of(r.extremal), c.minimisers) << n << "," << e;
    }
  }
}

TEST(Bruteforce, PrunedAgreesWithSweep) {
  for (int n = 1; n <= 8; ++n) {
    const auto sweep = g3_sweep(n);
    ASSERT_EQ(static_cast<std::int64_t>(sweep.size()), choose2(n) + 1);
    for (const OracleResult& s : sweep) {
      const OracleResult p = g3_bruteforce(n, s.e);
      ASSERT_EQ(p.g3_min, s.g3_min) << n << "," << s.e;
      ASSERT_EQ(p.extremal, s.extremal) << n << "," << s.e;
    }
  }
}

TEST(Bruteforce, MinimumBoundsAndMonotone) {
  for (int n = 1; n <= 8; ++n) {
    const auto sweep = g3_sweep(n);
    for (const OracleResult& s : sweep) {
      // ceil(goodman)+ <= g3_min.
      const Rational gb = goodman_bound(n, s.e);
      ASSERT_LE(gb, Rational(s.g3_min)) << n << "," << s.e;
      ASSERT_EQ(s.g3_min, extremal_profile(n, s.e).h_star) << n << "," << s.e;
      if (s.e > 0) {
        ASSERT_GE(s.g3_min, sweep[static_cast<std::size_t>(s.e - 1)].g3_min);
      }
    }
  }
}

TEST(VerifyConjecture, Examples) {
  for (const int n : {5, 7}) {
    const ConjectureReport r = verify_conjecture(n);
    EXPECT_TRUE(r.passed()) << n;
    EXPECT_EQ(static_cast<std::int64_t>(r.cells.size()), choose2(n));
  }
  const ConjectureReport six = verify_conjecture(6);
  const ConjectureCell& c = six.cells[9];
  ASSERT_EQ(c.e, 10);
  EXPECT_TRUE(c.set_ok);
  std::set<CanonicalForm> fam;
  for (const FamilyId f : {FamilyId::kH0star, FamilyId::kH2star})
    for (const CanonicalForm& x : enumerate_family(6, 10, f)) fam.insert(x);
  const OracleResult o = g3_bruteforce(6, 10);
  EXPECT_EQ(std::set<CanonicalForm>(o.extremal.begin(), o.extremal.end()), fam);
}

TEST(VerifyConjecture, HoldsThroughEight) {
  for (int n = 1; n <= 8; ++n) {
    const ConjectureReport r = verify_conjecture(n);
    for (const ConjectureCell& c : r.cells) {
      EXPECT_TRUE(c.value_ok) << n << "," << c.e;
      EXPECT_TRUE(c.set_ok) << n << "," << c.e;
    }
  }
}

TEST(KpartiteMin, Examples) {
  EXPECT_EQ(kpartite_min(6, 10, 3).g3_min, 3);
  EXPECT_EQ(kpartite_min(5, 9, 4).g3_min, 7);
  for (int n = 3; n <= 8; ++n) {
    for (int k = 2; k <= n; ++k) {
      const std::int64_t e = turan_edges(n, k);
      if (k_index(n, e) != k) continue;
      const OracleResult r = kpartite_min(n, e, k);
      EXPECT_EQ(r.g3_min, multipartite_triangles(turan(n, k).sizes));
      ASSERT_EQ(r.extremal.size(), 1U);
      EXPECT_EQ(r.extremal[0], canonical_form(build_h_star(n, e)));
    }
  }
  EXPECT_THROW(kpartite_min(6, 10, 4), DomainError);
}

TEST(KpartiteMin, MatchesColorableBruteForce) {
  // Minimum over labeled k-colorable graphs, k = k_index, for n <= 6.
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<std::int64_t> best(static_cast<std::size_t>(pairs + 1), -1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::from_mask(n, mask);
      const std::int64_t e = g.edge_count();
      if (e == 0) continue;
      if (!oracle::colorable(g, static_cast<int>(k_index(n, e)))) continue;
      auto& b = best[static_cast<std::size_t>(e)];
      const std::int64_t t = oracle::triangles(g);
      if (b < 0 || t < b) b = t;
    }
    for (std::int64_t e = 1; e <= pairs; ++e) {
      ASSERT_EQ(kpartite_min(n, e, k_index(n, e)).g3_min, best[static_cast<std::size_t>(e)])
          << n << "," << e;
    }
  }
}

TEST(KpartiteMin, MinimisersInH2AndSomeInH1) {
  for (int n = 1; n <= 8; ++n) {
    for (std::int64_t e = 1; e <= choose2(n); ++e) {
      const OracleResult r = kpartite_min(n, e, k_index(n, e));
      bool any_h1 = false;
      for (const CanonicalForm& f : r.extremal) {
        const Graph g = unpack(f);
        ASSERT_TRUE(family_membership(g, FamilyId::kH2, e).member) << n << "," << e;
        any_h1 = any_h1 || family_membership(g, FamilyId::kH1, e).member;
      }
      ASSERT_TRUE(any_h1) << n << "," << e;
    }
  }
}

TEST(LocalSearch, Examples) {
  for (int n = 4; n <= 12; ++n) {
    for (std::int64_t e = 1; e <= choose2(n); e += 3) {
      const LocalSearchResult r = local_search_upper(n, e, 1, 200);
      ASSERT_LE(r.best, extremal_profile(n, e).h_star);
      ASSERT_EQ(r.witness.edge_count(), e);
      ASSERT_EQ(count_triangles(r.witness), r.best);
    }
  }
  EXPECT_EQ(local_search_upper(5, 9, 3, 500).best, 7);
}

TEST(LocalSearch, RandomStartsReachOptimumAtSixTen) {
  // Regression expectation, not a theorem: one random start per seed.
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const LocalSearchResult r =
        local_search_upper(6, 10, 1, kDefaultLocalSearchBudget, seed, false);
    if (r.best == 3) ++hits;
  }
  EXPECT_EQ(hits, 100);
}

TEST(LocalSearch, Deterministic) {
  const LocalSearchResult a = local_search_upper(10, 30, 4, 1000, 99);
  const LocalSearchResult b = local_search_upper(10, 30, 4, 1000, 99);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.witness, b.witness);
}

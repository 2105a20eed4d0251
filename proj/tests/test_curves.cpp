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

#include <cmath>
#include <random>
#include <sstream>

#include "support.hpp"
#include "trimin/curves.hpp"
#include "trimin/error.hpp"
#include "trimin/extremal.hpp"
#include "trimin/rational.hpp"
#include "trimin/turan.hpp"

using namespace trimin;

namespace {

// g3 from the construction itself: triangle density of K[c,...,c,c'] with
// the k(lam) parts, times 6. No shared code with g3_lambda.
double g3_direct(double lam_d) {
  // long double: the last part 1-(k-1)c cancels badly for large k.
  const long double lam = lam_d;
  if (lam >= 1.0L) return 1.0;
  int k = 1;
  while (lam > 1.0L - 1.0L / k) ++k;
  if (k <= 2) return 0.0;
  const long double c = (1.0L + std::sqrt(std::max(0.0L, 1.0L - k / (k - 1.0L) * lam))) / k;
  std::vector<long double> x(static_cast<std::size_t>(k - 1), c);
  x.push_back(1.0L - (k - 1) * c);
  // e3 of the part sizes by the usual one-at-a-time recurrence.
  long double e1 = 0.0L, e2 = 0.0L, e3 = 0.0L;
  for (const long double v : x) {
    e3 += e2 * v;
    e2 += e1 * v;
    e1 += v;
  }
  return static_cast<double>(6.0L * e3);
}

}  // namespace

TEST(G3Lambda, Examples) {
  EXPECT_DOUBLE_EQ(g3_lambda(0.5), 0.0);
  EXPECT_NEAR(g3_lambda(2.0 / 3.0), 2.0 / 9.0, 1e-14);
  EXPECT_NEAR(g3_lambda(0.75), 3.0 / 8.0, 1e-14);
  EXPECT_DOUBLE_EQ(g3_lambda(1.0), 1.0);
  EXPECT_THROW(g3_lambda(-0.1), DomainError);
}

TEST(G3Lambda, MatchesDirectConstruction) {
  for (int i = 0; i <= 10000; ++i) {
    const double lam = i / 10000.0;
    ASSERT_NEAR(g3_lambda(lam), g3_direct(lam), 1e-12) << lam;
  }
}

TEST(G3Lambda, ContinuousWithTuranValues) {
  double prev = g3_lambda(0.0);
  for (int i = 1; i <= 10000; ++i) {
    const double cur = g3_lambda(i * 1e-4);
    ASSERT_LT(std::abs(cur - prev), 1e-2) << i;
    prev = cur;
  }
  for (int k = 2; k <= 12; ++k) {
    const double at = 1.0 - 1.0 / k;
    const double want = (k - 1.0) * (k - 2.0) / (static_cast<double>(k) * k);
    EXPECT_NEAR(g3_lambda(at), want, 1e-12);
    EXPECT_NEAR(g3_lambda(at - 1e-9), want, 1e-7);
    if (k < 12) {
      EXPECT_NEAR(g3_lambda(at + 1e-9), want, 1e-7);
    }
  }
}

TEST(G3Lambda, StrictlyConcaveBetweenTuranPoints) {
  std::mt19937_64 rng(31);
  for (int k = 3; k <= 8; ++k) {
    const double lo = 1.0 - 1.0 / (k - 1);
    const double hi = 1.0 - 1.0 / k;
    std::uniform_real_distribution<double> u(lo, hi);
    for (int i = 0; i < 1000; ++i) {
      double a = u(rng), b = u(rng);
      if (a > b) std::swap(a, b);
      if (b - a < 1e-4) continue;
      const double mid = (a + b) / 2;
      ASSERT_GT(g3_lambda(mid), (g3_lambda(a) + g3_lambda(b)) / 2) << k << " " << a << " " << b;
    }
  }
}

TEST(GoodmanBound, Examples) {
  EXPECT_EQ(goodman_bound(6, 12), Rational(8));
  EXPECT_EQ(goodman_bound(5, 9), Rational(33, 5));
  EXPECT_LT(goodman_bound(5, 9), Rational(7));
  for (int n = 1; n <= 20; ++n)
    for (std::int64_t e = 0; 4 * e <= n * n && e <= choose2(n); ++e)
      EXPECT_LE(goodman_bound(n, e), Rational(0));
}

TEST(GoodmanBound, BelowG3ExceptAtTuranDensities) {
  for (int i = 0; i < 10000; ++i) {
    const double lam = 0.5 + 0.5 * i / 10000.0;
    const double goodman = lam * (2 * lam - 1);
    bool turan_point = false;
    for (int k = 2; k <= 20000; ++k) turan_point = turan_point || std::abs(lam - (1.0 - 1.0 / k)) < 1e-15;
    if (turan_point) {
      ASSERT_NEAR(goodman, g3_lambda(lam), 1e-12);
    } else {
      ASSERT_LT(goodman, g3_lambda(lam)) << lam;
    }
  }
}

TEST(BoundCurves, Examples) {
  const BoundCurves one = bound_curves(1.0);
  EXPECT_DOUBLE_EQ(one.goodman, 1.0);
  EXPECT_DOUBLE_EQ(one.kk, 1.0);
  EXPECT_DOUBLE_EQ(one.bollobas, 1.0);
  EXPECT_DOUBLE_EQ(bound_curves(0.25).kk, 0.125);
  EXPECT_DOUBLE_EQ(bound_curves(0.25).goodman, 0.0);
  for (int k = 1; k <= 20; ++k) {
    const double at = 1.0 - 1.0 / k;
    EXPECT_NEAR(bound_curves(at).bollobas, g3_lambda(at), 1e-12);
  }
}

TEST(SandwichCheck, Examples) {
  EXPECT_TRUE(sandwich_check(8, 20, h_of(8, 20)));
  for (int n = 3; n <= 20; ++n) EXPECT_TRUE(sandwich_check(n, turan_edges(n, 2), 0));
  EXPECT_TRUE(sandwich_check(6, 12, 8));
  EXPECT_FALSE(sandwich_check(6, 12, 7));
  EXPECT_THROW(sandwich_check(4, 6, 4), DomainError);
}

TEST(SandwichCheck, DiscreteConvergesToCurve) {
  for (const std::int64_t n : {50, 100, 200}) {
    for (int i = 1; i <= 100; ++i) {
      const double lam = 0.9 * i / 100.0;
      const auto e = static_cast<std::int64_t>(std::floor(lam * n * n / 2.0));
      if (e >= choose2(n)) continue;
      ASSERT_TRUE(sandwich_check(n, e, h_of(n, e))) << n << "," << e;
      const double scaled = 6.0 * static_cast<double>(h_of(n, e)) / (double(n) * n * n);
      const double lam_e = 2.0 * e / (double(n) * n);
      const double slack = 6.0 / (double(n) * n - 2.0 * e) + 1e-9;
      ASSERT_GE(scaled, g3_lambda(lam_e) - 1e-9);
      ASSERT_LE(scaled - g3_lambda(lam_e), slack);
    }
  }
}

TEST(SampleCurves, Examples) {
  const auto rows = sample_curves(0.0, 1.0, 101);
  ASSERT_EQ(rows.size(), 101U);
  for (std::size_t i = 1; i < rows.size(); ++i) ASSERT_GT(rows[i].lam, rows[i - 1].lam);
  for (const auto& r : rows) {
    ASSERT_LE(r.goodman, r.g3 + 1e-12);
    ASSERT_LE(r.g3, r.kk + 1e-12);
    ASSERT_LE(r.goodman, r.bollobas + 1e-12);
    ASSERT_LE(r.bollobas, r.g3 + 1e-12);
  }
  const auto three = sample_curves(0.0, 1.0, 3);
  ASSERT_EQ(three.size(), 3U);
  EXPECT_DOUBLE_EQ(three[1].lam, 0.5);
  EXPECT_DOUBLE_EQ(three[1].g3, 0.0);
  EXPECT_THROW(sample_curves(0.5, 0.2, 10), DomainError);
}

TEST(SampleCurves, CsvFormat) {
  std::ostringstream os;
  write_curves_csv(os, sample_curves(0.0, 1.0, 3));
  EXPECT_EQ(os.str(),
            "lambda,g3,goodman,kk,bollobas\n"
            "0,0,0,0,0\n"
            "0.5,0,0,0.353553390593,0\n"
            "1,1,1,1,1\n");
}

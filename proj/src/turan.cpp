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

#include "trimin/turan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trimin/error.hpp"
#include "trimin/graph.hpp"

namespace trimin {

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value");
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // mantissa * 2^53 is an integer for every double.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  Rational r(scaled);
  exponent -= 53;
  if (exponent > 0) {
    r *= Rational(BigInt(1) << exponent);
  } else if (exponent < 0) {
    r /= Rational(BigInt(1) << -exponent);
  }
  return r;
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::int64_t turan_edges(std::int64_t n, std::int64_t s) {
  if (n < 0 || s < 1) throw DomainError("turan_edges needs n >= 0, s >= 1");
  const std::int64_t q = n / s;
  const std::int64_t r = n % s;
  return choose2(n) - r * choose2(q + 1) - (s - r) * choose2(q);
}

TuranSpec turan(std::int64_t n, int s) {
  if (s < 1 || s > n) {
    throw DomainError("turan(" + std::to_string(n) + "," + std::to_string(s) +
                      ") needs 1 <= s <= n");
  }
  TuranSpec spec;
  spec.n = n;
  spec.s = s;
  const std::int64_t q = n / s;
  const std::int64_t r = n % s;
  for (int i = 0; i < s; ++i) spec.sizes.push_back(i < r ? q + 1 : q);
  spec.edges = turan_edges(n, s);
  return spec;
}

int k_index(std::int64_t n, std::int64_t e) {
  if (n < 1 || n > kMaxProfileOrder) {
    throw DomainError("order " + std::to_string(n) + " out of range");
  }
  if (e < 0 || e > choose2(n)) {
    throw DomainError("edge count " + std::to_string(e) + " outside [0," +
                      std::to_string(choose2(n)) + "]");
  }
  std::int64_t lo = 1;
  std::int64_t hi = n;
  while (lo < hi) {
    const std::int64_t mid = (lo + hi) / 2;
    if (e <= turan_edges(n, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return static_cast<int>(lo);
}

int k_lambda(const Rational& lam) {
  if (lam < 0 || lam >= 1) throw DomainError("density must lie in [0,1)");
  if (lam == 0) return 1;
  // lam <= 1 - 1/k  <=>  k >= 1/(1 - lam).
  const Rational bound = 1 / (1 - lam);
  BigInt k = boost::multiprecision::numerator(bound) /
             boost::multiprecision::denominator(bound);
  if (Rational(k) < bound) ++k;
  return static_cast<int>(k);
}

int k_lambda(double lam) {
  if (!(lam >= 0.0 && lam < 1.0)) {
    throw DomainError("density must lie in [0,1)");
  }
  const int k = k_lambda(exact_rational(lam));
  // A double a few ulps above 1-1/(k-1) is read as that Turán density.
  if (k >= 3) {
    const double b = 1.0 - 1.0 / static_cast<double>(k - 1);
    if (lam - b <= 4.0 * std::numeric_limits<double>::epsilon()) return k - 1;
  }
  return k;
}

double c_lambda(double lam) {
  const int k = k_lambda(lam);
  if (k == 1) return 1.0;
  const double radicand = 1.0 - static_cast<double>(k) /
                                    static_cast<double>(k - 1) * lam;
  return (1.0 + std::sqrt(std::max(0.0, radicand))) / static_cast<double>(k);
}

double c_of(std::int64_t n, std::int64_t e) {
  const int k = k_lambda(Rational(2 * e, n * n));
  if (k == 1) return 1.0;
  // Radicand ((k-1)n^2 - 2ke) / ((k-1)n^2) in integers; the float version
  // cancels badly near Turán densities.
  const std::int64_t num = (k - 1) * n * n - 2 * k * e;
  const double radicand = static_cast<double>(std::max<std::int64_t>(num, 0)) /
                          (static_cast<double>(k - 1) * static_cast<double>(n) * static_cast<double>(n));
  return (1.0 + std::sqrt(radicand)) / static_cast<double>(k);
}

bool c_compare_in_range(std::int64_t n, std::int64_t e) {
  const int k = k_index(n, e);
  if (k < 2) return false;
  const std::int64_t slack = (k - 1 + 7) / 8;
  return turan_edges(n, k - 1) + slack <= e && e <= turan_edges(n, k);
}

std::strong_ordering c_compare(std::int64_t n, std::int64_t e,
                               std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("c_compare needs a positive denominator");
  if (!c_compare_in_range(n, e)) {
    throw DomainError("k-mismatch risk: (" + std::to_string(n) + "," +
                      std::to_string(e) +
                      ") is outside t_{k-1}(n)+ceil((k-1)/8) <= e <= t_k(n)");
  }
  const BigInt k = k_index(n, e);
  const BigInt bn = n;
  const BigInt be = e;
  // c*n = (n + sqrt(D/(k-1))) / k with D = n^2 (k-1) - 2ek >= 0.
  const BigInt d = bn * bn * (k - 1) - 2 * be * k;
  const BigInt rhs = k * BigInt(num) - BigInt(den) * bn;
  // Compare den * sqrt(D/(k-1)) against rhs.
  if (rhs < 0) return std::strong_ordering::greater;
  const BigInt left = BigInt(den) * BigInt(den) * d;
  const BigInt right = rhs * rhs * (k - 1);
  if (left < right) return std::strong_ordering::less;
  if (left > right) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace trimin

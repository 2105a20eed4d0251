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

#include "trimin/curves.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "trimin/error.hpp"
#include "trimin/graph.hpp"
#include "trimin/turan.hpp"

namespace trimin {

namespace {

void check_density(double lam) {
  if (!(lam >= 0.0 && lam <= 1.0)) {
    throw DomainError("density must lie in [0,1]");
  }
}

// (k-1)(k-2)/k^2, the value at lam = 1 - 1/k.
double turan_point(double k) { return (k - 1.0) * (k - 2.0) / (k * k); }

}  // namespace

double g3_lambda(double lam) {
  check_density(lam);
  if (lam == 1.0) return 1.0;
  const int k = k_lambda(lam);
  if (k <= 2) return 0.0;
  const double c = c_lambda(lam);
  const double cp = 1.0 - static_cast<double>(k - 1) * c;
  const double km1 = static_cast<double>(k - 1);
  const double b3 = km1 * (km1 - 1.0) * (km1 - 2.0) / 6.0;
  const double b2 = km1 * (km1 - 1.0) / 2.0;
  return 6.0 * (b3 * c * c * c + b2 * c * c * cp);
}

Rational goodman_bound(std::int64_t n, std::int64_t e) {
  if (n < 1 || e < 0 || e > choose2(n)) {
    throw DomainError("goodman_bound needs n >= 1 and 0 <= e <= C(n,2)");
  }
  const BigInt bn = n;
  const BigInt be = e;
  return Rational(be * (4 * be - bn * bn), 3 * bn);
}

BoundCurves bound_curves(double lam) {
  check_density(lam);
  BoundCurves b;
  b.goodman = std::max(0.0, lam * (2.0 * lam - 1.0));
  b.kk = std::pow(lam, 1.5);
  if (lam <= 0.5) {
    b.bollobas = 0.0;
  } else if (lam == 1.0) {
    b.bollobas = 1.0;
  } else {
    // lam in (1 - 1/(k-1), 1 - 1/k]: chord between the two Turán points.
    const double k = static_cast<double>(k_lambda(lam));
    const double x0 = 1.0 - 1.0 / (k - 1.0);
    const double x1 = 1.0 - 1.0 / k;
    const double y0 = turan_point(k - 1.0);
    const double y1 = turan_point(k);
    b.bollobas = y0 + (y1 - y0) * (lam - x0) / (x1 - x0);
  }
  return b;
}

bool sandwich_check(std::int64_t n, std::int64_t e, std::int64_t g3_exact) {
  if (n < 1 || e < 0 || e >= choose2(n)) {
    throw DomainError("sandwich_check needs 0 <= e < C(n,2)");
  }
  const double dn = static_cast<double>(n);
  const double lam = 2.0 * static_cast<double>(e) / (dn * dn);
  const double middle = dn * dn * dn / 6.0 * g3_lambda(lam);
  const double upper = dn * dn * dn / (dn * dn - 2.0 * static_cast<double>(e));
  const double gap = static_cast<double>(g3_exact) - middle;
  const double slack = 1e-6 * std::max(1.0, std::abs(middle));
  return gap >= -slack && gap <= upper + slack;
}

std::vector<CurveSample> sample_curves(double lo, double hi, int steps) {
  if (!(lo >= 0.0 && lo < hi && hi <= 1.0) || steps < 2) {
    throw DomainError("sample_curves needs 0 <= lo < hi <= 1 and steps >= 2");
  }
  std::vector<CurveSample> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    double lam = lo + (hi - lo) * static_cast<double>(i) /
                          static_cast<double>(steps - 1);
    if (i == steps - 1) lam = hi;
    const BoundCurves b = bound_curves(lam);
    rows.push_back({lam, g3_lambda(lam), b.goodman, b.kk, b.bollobas});
  }
  return rows;
}

void write_curves_csv(std::ostream& os, const std::vector<CurveSample>& rows) {
  os << "lambda,g3,goodman,kk,bollobas\n";
  std::ostringstream line;
  line << std::setprecision(12);
  for (const CurveSample& r : rows) {
    line.str("");
    line << r.lam << ',' << r.g3 << ',' << r.goodman << ',' << r.kk << ','
         << r.bollobas << '\n';
    os << line.str();
  }
}

}  // namespace trimin

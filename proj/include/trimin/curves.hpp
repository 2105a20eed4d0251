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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "trimin/rational.hpp"

namespace trimin {

/// All values are triangle densities normalised by n^3/6.
struct CurveSample {
  double lam = 0.0;
  double g3 = 0.0;
  double goodman = 0.0;
  double kk = 0.0;
  double bollobas = 0.0;
};

struct BoundCurves {
  double goodman = 0.0;
  double kk = 0.0;
  double bollobas = 0.0;
};

/// Limit density of H*: 6 (C(k-1,3) c^3 + C(k-1,2) c^2 c'), with g3(1) = 1.
double g3_lambda(double lam);

/// e(4e - n^2) / (3n), exact; negative below n^2/4.
Rational goodman_bound(std::int64_t n, std::int64_t e);

/// Goodman clipped at 0, lam^{3/2}, and the chord interpolation through the
/// points (1 - 1/k, (k-1)(k-2)/k^2).
BoundCurves bound_curves(double lam);

/// 0 <= g3_exact - (n^3/6) g3_lambda(2e/n^2) <= n^3/(n^2 - 2e), with the
/// middle term allowed 1e-6 relative slack.
bool sandwich_check(std::int64_t n, std::int64_t e, std::int64_t g3_exact);

std::vector<CurveSample> sample_curves(double lo, double hi, int steps);

/// Header "lambda,g3,goodman,kk,bollobas", 12 significant digits.
void write_curves_csv(std::ostream& os, const std::vector<CurveSample>& rows);

}  // namespace trimin

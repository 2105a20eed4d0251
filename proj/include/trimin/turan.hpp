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

#include <compare>
#include <cstdint>
#include <vector>

#include "trimin/rational.hpp"

namespace trimin {

/// Orders above this are rejected by the integer-valued routines so that all
/// triangle counts stay inside int64.
inline constexpr std::int64_t kMaxProfileOrder = 1'000'000;

/// Balanced complete s-partite graph on n vertices.
struct TuranSpec {
  std::int64_t n = 0;
  int s = 0;
  std::vector<std::int64_t> sizes;  // nonincreasing
  std::int64_t edges = 0;
};

TuranSpec turan(std::int64_t n, int s);

/// t_s(n) for any n >= 0 and s >= 1 (s >= n gives the complete graph).
std::int64_t turan_edges(std::int64_t n, std::int64_t s);

/// Smallest s with e <= t_s(n), i.e. t_{k-1}(n) < e <= t_k(n); 1 when e = 0.
int k_index(std::int64_t n, std::int64_t e);

/// min{k : lam <= 1 - 1/k}, decided exactly on the rational value of lam.
int k_lambda(const Rational& lam);
int k_lambda(double lam);

/// Larger root c >= 1/k of C(k-1,2)c^2 + (1-c')c' = lam/2 with
/// c' = 1 - (k-1)c; c(0) = 1.
double c_lambda(double lam);

/// c(2e/n^2) in floating point; for display and curve sampling only.
double c_of(std::int64_t n, std::int64_t e);

/// Exact sign of c(n,e)*n - num/den, with k = k(n,e). Requires
/// t_{k-1}(n) + ceil((k-1)/8) <= e <= t_k(n) so the asymptotic and discrete
/// indices agree; otherwise DomainError ("k-mismatch risk").
std::strong_ordering c_compare(std::int64_t n, std::int64_t e,
                               std::int64_t num, std::int64_t den);

/// True iff (n, e) satisfies the c_compare precondition.
bool c_compare_in_range(std::int64_t n, std::int64_t e);

}  // namespace trimin

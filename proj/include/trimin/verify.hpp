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
#include <string>
#include <vector>

#include "trimin/oracle.hpp"

namespace trimin {

/// Outcome of a verification suite. `lines` carries one entry per checked
/// unit (order, cell, instance batch) and every discrepancy verbatim.
struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::vector<std::string> lines;
  std::string summary;
};

/// sweeps[n] = g3_sweep(n) for n = 1..n_max (index 0 unused).
using SweepTable = std::vector<std::vector<OracleResult>>;
SweepTable build_sweeps(int n_max, const OracleOptions& opts = {});

/// Oracle minimum equals h*(n,e) and the minimiser set equals starred H0 ∪
/// starred H2, for every n <= n_max and 1 <= e <= C(n,2).
SuiteReport run_conjecture_suite(const SweepTable& sweeps);

/// Goodman bound at e = t_k(n) equals h* exactly iff k divides n.
SuiteReport run_goodman_suite(int n_max);

/// Slope inequalities for n in [n_lo, n_hi] over its whole e-range.
SuiteReport run_slopes_suite(int n_lo, int n_hi);

/// Sandwich inequality against oracle values for every e < C(n,2).
SuiteReport run_sandwich_suite(const SweepTable& sweeps);

/// Minimum over each enumerated H_i equals h* and the minimisers are exactly
/// the enumerated starred H_i, i = 0,1,2.
SuiteReport run_family_minima_suite(int n_max);

/// Every triangle-minimal H0 member, under every witness partition,
/// symmetrises to a copy of H* with the same triangle count.
SuiteReport run_symmetrise_suite(int n_max);

/// Both identities on every labeled graph with n <= n_all and on `random`
/// seeded graphs with n <= random_n_max.
SuiteReport run_identities_suite(int n_all, int random, int random_n_max,
                                 std::uint64_t seed);

/// k-partite minimisers all lie in H2 and at least one lies in H1.
SuiteReport run_kpartite_suite(int n_max);

/// Curve ordering, g3 = 0 up to 1/2, and g3 at the Turán densities.
SuiteReport run_curves_suite(int points);

/// Comparison bound on seeded graph instances (n <= max_n) and on seeded
/// structural instances with nonzero size deviations.
SuiteReport run_gap_suite(int graph_instances, int max_n, int shape_instances,
                          std::uint64_t seed);

}  // namespace trimin

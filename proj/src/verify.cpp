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

#include "trimin/verify.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "trimin/analyze.hpp"
#include "trimin/curves.hpp"
#include "trimin/extremal.hpp"
#include "trimin/families.hpp"
#include "trimin/graph6.hpp"
#include "trimin/symmetrise.hpp"
#include "trimin/turan.hpp"

namespace trimin {

namespace {

std::string cell(std::int64_t n, std::int64_t e) {
  return "(" + std::to_string(n) + "," + std::to_string(e) + ")";
}

void fail(SuiteReport& r, const std::string& line) {
  r.passed = false;
  r.lines.push_back("FAIL " + line);
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + x;
  return out;
}

}  // namespace

SweepTable build_sweeps(int n_max, const OracleOptions& opts) {
  SweepTable t(static_cast<std::size_t>(n_max + 1));
  for (int n = 1; n <= n_max; ++n) t[static_cast<std::size_t>(n)] = g3_sweep(n, opts);
  return t;
}

SuiteReport run_conjecture_suite(const SweepTable& sweeps) {
  SuiteReport r{"conjecture", true, {}, {}};
  int orders = 0;
  int passed_orders = 0;
  for (std::size_t n = 1; n < sweeps.size(); ++n) {
    const ConjectureReport rep = verify_conjecture(sweeps[n]);
    ++orders;
    std::size_t ok = 0;
    for (const ConjectureCell& c : rep.cells) {
      if (c.value_ok && c.set_ok) {
        ++ok;
        continue;
      }
      std::ostringstream os;
      os << cell(static_cast<std::int64_t>(n), c.e) << " g3=" << c.g3_min
         << " h*=" << c.h_star << " oracle_classes=" << c.oracle_count
         << " family_classes=" << c.family_count;
      if (!c.only_oracle.empty()) os << " only_oracle=[" << join(c.only_oracle) << "]";
      if (!c.only_family.empty()) os << " only_family=[" << join(c.only_family) << "]";
      fail(r, os.str());
    }
    if (ok == rep.cells.size()) ++passed_orders;
    r.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(ok) + "/" +
                      std::to_string(rep.cells.size()) + " edge counts agree");
  }
  r.summary = std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(passed_orders) +
              "/" + std::to_string(orders) + " orders";
  return r;
}

SuiteReport run_goodman_suite(int n_max) {
  SuiteReport r{"goodman", true, {}, {}};
  int checked = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      const std::int64_t e = turan_edges(n, k);
      const bool equal = goodman_bound(n, e) == Rational(h_of(n, e));
      const bool divides = n % k == 0;
      ++checked;
      if (equal != divides) {
        fail(r, cell(n, e) + " k=" + std::to_string(k) + " goodman=" +
                    to_string(goodman_bound(n, e)) + " h*=" + std::to_string(h_of(n, e)));
      }
    }
  }
  r.summary = std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(checked) +
              " Turán points";
  return r;
}

SuiteReport run_slopes_suite(int n_lo, int n_hi) {
  SuiteReport r{"slopes", true, {}, {}};
  std::int64_t checked = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (std::int64_t e = 1; e < choose2(n); ++e) {
      const SlopeCheck s = check_slopes(n, e);
      if (!s.in_range) continue;
      ++checked;
      if (!s.delta_ok) fail(r, cell(n, e) + " slope outside (k-2)cn ± k");
      if (!s.parts_ok) fail(r, cell(n, e) + " some a*_i outside cn ± 2");
    }
  }
  r.summary = std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(checked) + " cells";
  return r;
}

SuiteReport run_sandwich_suite(const SweepTable& sweeps) {
  SuiteReport r{"sandwich", true, {}, {}};
  std::int64_t checked = 0;
  for (std::size_t n = 1; n < sweeps.size(); ++n) {
    for (const OracleResult& o : sweeps[n]) {
      if (o.e >= choose2(o.n)) continue;
      ++checked;
      if (!sandwich_check(o.n, o.e, o.g3_min)) {
        fail(r, cell(o.n, o.e) + " g3=" + std::to_string(o.g3_min));
      }
    }
  }
  r.summary = std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(checked) + " cells";
  return r;
}

SuiteReport run_family_minima_suite(int n_max) {
  SuiteReport r{"family-minima", true, {}, {}};
  std::int64_t checked = 0;
  const FamilyId plain[] = {FamilyId::kH0, FamilyId::kH1, FamilyId::kH2};
  const FamilyId starred[] = {FamilyId::kH0star, FamilyId::kH1star, FamilyId::kH2star};
  for (int n = 1; n <= n_max; ++n) {
    for (std::int64_t e = 1; e <= choose2(n); ++e) {
      const std::int64_t hs = h_of(n, e);
      for (int i = 0; i < 3; ++i) {
        ++checked;
        std::int64_t best = -1;
        std::set<CanonicalForm> minimisers;
        for (const CanonicalForm& f : enumerate_family(n, e, plain[i])) {
          const std::int64_t t = count_triangles(unpack(f));
          if (best < 0 || t < best) {
            best = t;
            minimisers.clear();
          }
          if (t == best) minimisers.insert(f);
        }
        const auto star = enumerate_family(n, e, starred[i]);
        const std::set<CanonicalForm> star_set(star.begin(), star.end());
        const std::string tag = cell(n, e) + " H" + std::to_string(i);
        if (best != hs) {
          fail(r, tag + " minimum " + std::to_string(best) + " != h* " + std::to_string(hs));
        }
        if (minimisers != star_set) {
          fail(r, tag + " minimisers (" + std::to_string(minimisers.size()) +
                      ") differ from the starred family (" +
                      std::to_string(star_set.size()) + ")");
        }
      }
    }
  }
  r.summary = std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(checked) +
              " family cells";
  return r;
}

SuiteReport run_symmetrise_suite(int n_max) {
  SuiteReport r{"symmetrise", true, {}, {}};
  std::int64_t runs = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (std::int64_t e = 1; e <= choose2(n); ++e) {
      const std::int64_t hs = h_of(n, e);
      const CanonicalForm target = canonical_form(build_h_star(n, e));
      const int k = k_index(n, e);
      for (const CanonicalForm& f : enumerate_family(n, e, FamilyId::kH0)) {
        const Graph g = unpack(f);
        if (count_triangles(g) != hs) continue;
        for_each_h0_partition(g, k, [&](const Partition& w) {
          ++runs;
          const SymmetriseResult s = symmetrise_h0(g, w);
          if (canonical_form(s.graph) != target || count_triangles(s.graph) != hs) {
            fail(r, cell(n, e) + " input " + to_graph6(g) + " gave " +
                        to_graph6(s.graph));
          }
          return false;
        });
      }
    }
  }
  r.summary = std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(runs) +
              " symmetrisations";
  return r;
}

SuiteReport run_identities_suite(int n_all, int random, int random_n_max,
                                 std::uint64_t seed) {
  SuiteReport r{"identities", true, {}, {}};
  std::int64_t checked = 0;
  auto check = [&](const Graph& g) {
    ++checked;
    const IdentityCheck c = ls_identities(g);
    if (!c.triple_ok || (c.s_identity_ok && !*c.s_identity_ok)) {
      fail(r, "graph " + to_graph6(g));
    }
  };
  for (int n = 1; n <= n_all; ++n) {
    std::vector<Edge> pairs;
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) pairs.push_back({u, v});
    }
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) g.add_edge(pairs[i].u, pairs[i].v);
      }
      check(g);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(1, random_n_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < random; ++i) {
    const int n = order(rng);
    const double p = unit(rng);
    Graph g(n);
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) {
        if (unit(rng) < p) g.add_edge(u, v);
      }
    }
    check(g);
  }
  r.summary = std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(checked) + " graphs";
  return r;
}

SuiteReport run_kpartite_suite(int n_max) {
  SuiteReport r{"kpartite", true, {}, {}};
  std::int64_t checked = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (std::int64_t e = 1; e <= choose2(n); ++e) {
      const int k = k_index(n, e);
      const OracleResult o = kpartite_min(n, e, k);
      ++checked;
      bool any_h1 = false;
      for (const CanonicalForm& f : o.extremal) {
        const Graph g = unpack(f);
        if (!family_membership(g, FamilyId::kH2, e).member) {
          fail(r, cell(n, e) + " minimiser " + to_graph6(g) + " not in H2");
        }
        any_h1 = any_h1 || family_membership(g, FamilyId::kH1, e).member;
      }
      if (!any_h1) fail(r, cell(n, e) + " no minimiser in H1");
    }
  }
  r.summary = std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(checked) + " cells";
  return r;
}

SuiteReport run_curves_suite(int points) {
  SuiteReport r{"curves", true, {}, {}};
  const double tol = 1e-9;
  for (const CurveSample& s : sample_curves(0.0, 1.0, points)) {
    if (!(s.goodman <= s.bollobas + tol && s.bollobas <= s.g3 + tol && s.g3 <= s.kk + tol)) {
      std::ostringstream os;
      os.precision(12);
      os << "lambda=" << s.lam << " goodman=" << s.goodman << " bollobas=" << s.bollobas
         << " g3=" << s.g3 << " kk=" << s.kk;
      fail(r, os.str());
    }
    if (s.lam <= 0.5 && s.g3 != 0.0) fail(r, "g3 nonzero at lambda " + std::to_string(s.lam));
  }
  for (int k = 1; k <= 8; ++k) {
    const double lam = 1.0 - 1.0 / k;
    const double want = (k - 1.0) * (k - 2.0) / (static_cast<double>(k) * k);
    if (std::abs(g3_lambda(lam) - want) > 1e-12) {
      fail(r, "g3(1-1/" + std::to_string(k) + ") = " + std::to_string(g3_lambda(lam)));
    }
  }
  r.summary = std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(points) + " samples";
  return r;
}

SuiteReport run_gap_suite(int graph_instances, int max_n, int shape_instances,
                          std::uint64_t seed) {
  SuiteReport r{"gap", true, {}, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < graph_instances; ++i) {
    const GapInstance inst = random_gap_instance(rng, max_n);
    const GapBoundResult g = kpartite_gap_bound(inst.g, inst.a, inst.f, inst.b, inst.d);
    if (!g.holds) {
      fail(r, "graph instance " + std::to_string(i) + " G=" + to_graph6(inst.g) +
                  " F=" + to_graph6(inst.f) + " bound=" + to_string(g.bound) +
                  " diff=" + to_string(g.difference));
    }
  }
  for (int i = 0; i < shape_instances; ++i) {
    const GapShapeInstance inst = random_gap_shape(rng);
    const GapBoundResult g = kpartite_gap_bound(inst.g, inst.f_sizes, inst.f_missing, inst.d);
    if (!g.holds) {
      fail(r, "shape instance " + std::to_string(i) + " bound=" + to_string(g.bound) +
                  " diff=" + to_string(g.difference));
    }
  }
  r.summary = std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(graph_instances) +
              " graph instances, " + std::to_string(shape_instances) + " structural instances";
  return r;
}

}  // namespace trimin

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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "trimin/analyze.hpp"
#include "trimin/curves.hpp"
#include "trimin/enumerate.hpp"
#include "trimin/error.hpp"
#include "trimin/extremal.hpp"
#include "trimin/families.hpp"
#include "trimin/graph6.hpp"
#include "trimin/json_io.hpp"
#include "trimin/oracle.hpp"
#include "trimin/symmetrise.hpp"
#include "trimin/turan.hpp"
#include "trimin/verify.hpp"

using namespace trimin;

namespace {

// graph6 lines from stdin; blank lines and the optional header are skipped.
std::vector<Graph> read_graphs(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string join_sizes(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ";" : "") + std::to_string(xs[i]);
  return s;
}

Json oracle_line(const OracleResult& r, bool all_extremal) {
  Json j = to_json(r);
  if (!all_extremal && j["extremal"].size() > 1) {
    Json first = Json::array({j["extremal"][0]});
    j["extremal"] = first;
  }
  j["extremal_count"] = r.extremal.size();
  return j;
}

struct Opts {
  std::int64_t n = 0;
  std::int64_t e = -1;
  bool all_e = false;
  std::string format;
  std::string family;
  double lo = 0.0, hi = 1.0;
  int steps = 101;
  bool all_extremal = false;
  int jobs = 1;
  std::string resume;
  bool allow_large = false;
  std::string suite;
  int n_max = 7;
  std::uint64_t seed = kDefaultSeed;
  int k = 0;
  bool exact = false;
  double z_threshold = kDefaultZThreshold;
  std::string partition_file;
};

int cmd_profile(const Opts& o) {
  std::vector<std::int64_t> es;
  if (o.all_e) {
    for (std::int64_t e = 0; e <= o.n * (o.n - 1) / 2; ++e) es.push_back(e);
  } else {
    if (o.e < 0) throw CLI::RequiredError("--e or --all-e");
    es.push_back(o.e);
  }
  if (o.format == "csv") {
    std::cout << "n,e,k,a_star,m_star,h_star\n";
    for (const std::int64_t e : es) {
      const ExtremalProfile p = extremal_profile(o.n, e);
      std::cout << p.n << ',' << p.e << ',' << p.k << ',' << join_sizes(p.a_star) << ','
                << p.m_star << ',' << p.h_star << '\n';
    }
    return 0;
  }
  if (!o.all_e) {
    std::cout << to_json(extremal_profile(o.n, es.front())).dump() << '\n';
    return 0;
  }
  Json arr = Json::array();
  for (const std::int64_t e : es) arr.push_back(to_json(extremal_profile(o.n, e)));
  std::cout << arr.dump() << '\n';
  return 0;
}

int cmd_construct(const Opts& o) {
  const Graph g = build_h_star(o.n, o.e);
  if (o.format == "json") {
    std::cout << graph_to_json(g).dump() << '\n';
  } else {
    std::cout << to_graph6(g) << '\n';
  }
  return 0;
}

int cmd_families(const Opts& o) {
  const FamilyId f = parse_family(o.family);
  const auto forms = enumerate_family(static_cast<int>(o.n), o.e, f);
  if (o.format == "json") {
    Json arr = Json::array();
    for (const CanonicalForm& c : forms) arr.push_back(to_graph6(unpack(c)));
    std::cout << arr.dump() << '\n';
  } else {
    for (const CanonicalForm& c : forms) std::cout << to_graph6(unpack(c)) << '\n';
  }
  return 0;
}

int cmd_member(const Opts& o) {
  const FamilyId f = parse_family(o.family);
  for (const Graph& g : read_graphs(std::cin)) {
    const std::int64_t e = o.e >= 0 ? o.e : g.edge_count();
    std::cout << to_json(family_membership(g, f, e)).dump() << '\n';
  }
  return 0;
}

int cmd_curves(const Opts& o) {
  const auto rows = sample_curves(o.lo, o.hi, o.steps);
  if (o.format == "json") {
    Json arr = Json::array();
    for (const CurveSample& s : rows) {
      arr.push_back({{"lambda", s.lam}, {"g3", s.g3}, {"goodman", s.goodman},
                     {"kk", s.kk}, {"bollobas", s.bollobas}});
    }
    std::cout << arr.dump() << '\n';
  } else {
    write_curves_csv(std::cout, rows);
  }
  return 0;
}

int cmd_oracle(const Opts& o) {
  const OracleOptions opts{o.allow_large, o.jobs};
  const int n = static_cast<int>(o.n);
  std::set<std::pair<std::int64_t, std::int64_t>> done;
  std::ofstream resume_out;
  if (!o.resume.empty()) {
    std::ifstream in(o.resume);
    std::string line;
    while (std::getline(in, line)) {
      std::int64_t a = 0, b = 0;
      char comma = 0;
      std::istringstream ls(line);
      if (ls >> a >> comma >> b && comma == ',') done.insert({a, b});
    }
    resume_out.open(o.resume, std::ios::app);
    if (!resume_out) throw DomainError("cannot write " + o.resume);
  }
  std::vector<std::int64_t> es;
  if (o.e >= 0) {
    es.push_back(o.e);
  } else {
    for (std::int64_t e = 0; e <= choose2(n); ++e) es.push_back(e);
  }
  for (const std::int64_t e : es) {
    if (done.count({o.n, e}) != 0) continue;
    const OracleResult r = g3_bruteforce(n, e, opts);
    std::cout << oracle_line(r, o.all_extremal).dump() << '\n' << std::flush;
    if (resume_out) resume_out << o.n << ',' << e << '\n' << std::flush;
  }
  return 0;
}

int cmd_verify(const Opts& o) {
  SuiteReport r;
  if (o.suite == "conjecture") {
    r = run_conjecture_suite(build_sweeps(o.n_max, {o.allow_large, 1}));
  } else if (o.suite == "sandwich") {
    r = run_sandwich_suite(build_sweeps(o.n_max, {o.allow_large, 1}));
  } else if (o.suite == "slopes") {
    r = run_slopes_suite(20, o.n_max);
  } else if (o.suite == "identities") {
    r = run_identities_suite(std::min(o.n_max, 6), 10000, 12, o.seed);
  } else if (o.suite == "kpartite") {
    r = run_kpartite_suite(o.n_max);
  } else if (o.suite == "goodman") {
    r = run_goodman_suite(o.n_max);
  } else if (o.suite == "family-minima") {
    r = run_family_minima_suite(o.n_max);
  } else if (o.suite == "symmetrise") {
    r = run_symmetrise_suite(o.n_max);
  } else if (o.suite == "curves") {
    r = run_curves_suite(1001);
  } else {
    r = run_gap_suite(10000, o.n_max, 200, o.seed);
  }
  for (const std::string& line : r.lines) std::cout << line << '\n';
  std::cout << r.summary << '\n';
  return r.passed ? 0 : 1;
}

int cmd_analyze(const Opts& o) {
  for (const Graph& g : read_graphs(std::cin)) {
    const int k = o.k > 0 ? o.k : k_index(g.order(), g.edge_count());
    const PartitionAnalysis a = max_cut_partition(
        g, k, o.exact ? CutMode::kExact : CutMode::kHeuristic, o.z_threshold, o.seed);
    std::cout << to_json(a).dump() << '\n';
  }
  return 0;
}

int cmd_symmetrise(const Opts& o) {
  const Partition parts = partition_from_json(parse_json(read_file(o.partition_file)));
  for (const Graph& g : read_graphs(std::cin)) {
    const SymmetriseResult s = symmetrise_h0(g, parts);
    if (o.format == "json") {
      Json j = graph_to_json(s.graph);
      j["graph6"] = to_graph6(s.graph);
      j["parts"] = partition_to_json(s.parts)["parts"];
      j["t"] = s.t;
      j["b_index"] = s.b_index;
      j["m_prime"] = s.m_prime;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << to_graph6(s.graph) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact triangle minimisation toolkit"};
  app.require_subcommand(1, 1);
  Opts o;
  o.jobs = default_jobs();

  auto add_ne = [&](CLI::App* c, bool e_required) {
    c->add_option("--n", o.n, "number of vertices")->required()->check(CLI::NonNegativeNumber);
    auto* e = c->add_option("--e", o.e, "number of edges")->check(CLI::NonNegativeNumber);
    if (e_required) e->required();
  };

  auto* profile = app.add_subcommand("profile", "extremal profile (k, a*, m*, h*)");
  add_ne(profile, false);
  profile->add_flag("--all-e", o.all_e, "every e in [0, C(n,2)]");
  profile->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* construct = app.add_subcommand("construct", "build H*(n,e)");
  add_ne(construct, true);
  construct->add_option("--format", o.format)->check(CLI::IsMember({"graph6", "json"}));

  auto* families = app.add_subcommand("families", "enumerate a family up to isomorphism");
  add_ne(families, true);
  families->add_option("--family", o.family)->required();
  families->add_option("--format", o.format)->check(CLI::IsMember({"graph6", "json"}));

  auto* member = app.add_subcommand("member", "family membership of graph6 lines on stdin");
  member->add_option("--family", o.family)->required();
  member->add_option("--e", o.e, "edge count (default: the graph's)");

  auto* curves = app.add_subcommand("curves", "sample the bound curves");
  curves->add_option("--lo", o.lo);
  curves->add_option("--hi", o.hi);
  curves->add_option("--steps", o.steps)->check(CLI::PositiveNumber);
  curves->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  auto* oracle = app.add_subcommand("oracle", "brute-force minimum over isomorphism classes");
  add_ne(oracle, false);
  oracle->add_flag("--all-extremal", o.all_extremal, "list every extremal class");
  oracle->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  oracle->add_option("--resume", o.resume, "file of completed \"n,e\" cells");
  oracle->add_flag("--allow-large", o.allow_large, "permit n = 10");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"conjecture", "slopes", "sandwich", "identities", "kpartite",
                             "goodman", "family-minima", "symmetrise", "curves", "gap"}));
  verify->add_option("--n-max", o.n_max)->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed);
  verify->add_flag("--allow-large", o.allow_large, "permit n = 10");

  auto* analyze = app.add_subcommand("analyze", "max-cut partition analysis of graph6 on stdin");
  analyze->add_option("--k", o.k)->check(CLI::PositiveNumber);
  analyze->add_flag("--exact", o.exact, "exact max-cut");
  analyze->add_option("--z-threshold", o.z_threshold);
  analyze->add_option("--seed", o.seed);

  auto* symmetrise = app.add_subcommand("symmetrise", "Steps 1-6 on an H0 member read from stdin");
  symmetrise->add_option("--partition", o.partition_file, "JSON {\"parts\": [[...], ...]}")
      ->required();
  symmetrise->add_option("--format", o.format)->check(CLI::IsMember({"graph6", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*profile) return cmd_profile(o);
    if (*construct) return cmd_construct(o);
    if (*families) return cmd_families(o);
    if (*member) return cmd_member(o);
    if (*curves) return cmd_curves(o);
    if (*oracle) return cmd_oracle(o);
    if (*verify) return cmd_verify(o);
    if (*analyze) return cmd_analyze(o);
    if (*symmetrise) return cmd_symmetrise(o);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const UnsupportedError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 2;
}

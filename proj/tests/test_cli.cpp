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
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Runs the CLI through the shell with optional stdin text.
CliRun run(const std::string& args, const std::string& input = "") {
  // ctest runs these in parallel; one scratch dir per process.
  const auto dir = std::filesystem::temp_directory_path() /
                   ("trimin_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto in = dir / "in.txt", out = dir / "out.txt", err = dir / "err.txt";
  std::ofstream(in) << input;
  const std::string cmd = std::string(TRIMIN_CLI) + " " + args + " < " + in.string() + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string golden(const std::string& name) {
  return slurp(std::filesystem::path(TRIMIN_GOLDEN_DIR) / name);
}

}  // namespace

TEST(Cli, ProfileJson) {
  const CliRun r = run("profile --n 6 --e 10");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["a_star"], nlohmann::json({3, 2, 1}));
  EXPECT_EQ(j["m_star"], 1);
  EXPECT_EQ(j["h_star"], 3);
  EXPECT_EQ(r.out, golden("profile_6_10.json"));
}

TEST(Cli, ProfileCsvAllE) {
  const CliRun r = run("profile --n 5 --all-e --format csv");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("profile_5_all.csv"));
  const CliRun j = run("profile --n 5 --all-e --format json");
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out).size(), 11U);
}

TEST(Cli, Construct) {
  EXPECT_EQ(run("construct --n 4 --e 6").out, "C~\n");
  const CliRun r = run("construct --n 6 --e 10 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["edges"].size(), 10U);
}

TEST(Cli, Families) {
  const CliRun r = run("families --n 6 --e 10 --family h1star");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("families_6_10_h1star.txt"));
  const CliRun j = run("families --n 6 --e 10 --family h1star --format json");
  EXPECT_TRUE(nlohmann::json::parse(j.out).is_array());
  const CliRun bad = run("families --n 6 --e 10 --family h9");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("unknown family"), std::string::npos);
}

TEST(Cli, Member) {
  const std::string h = run("construct --n 6 --e 10").out;
  const CliRun r = run("member --family h2 --e 10", h);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["member"].get<bool>());
  EXPECT_EQ(j["witness"].size(), 3U);
  const CliRun c5 = run("member --family h1", "Dhc\n");
  EXPECT_TRUE(nlohmann::json::parse(c5.out)["member"].get<bool>());
  const CliRun garbage = run("member --family h1", "???\n");
  EXPECT_EQ(garbage.code, 1);
}

TEST(Cli, Curves) {
  const CliRun r = run("curves --lo 0 --hi 1 --steps 3 --format csv");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("curves_3.csv"));
  EXPECT_NE(r.out.find("\n0.5,0,"), std::string::npos);
  const CliRun j = run("curves --lo 0 --hi 1 --steps 11 --format json");
  EXPECT_EQ(nlohmann::json::parse(j.out).size(), 11U);
}

TEST(Cli, OracleJsonLinesAndResume) {
  const CliRun r = run("oracle --n 5");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("oracle_5.jsonl"));
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("g3") && j.contains("extremal"));
    ++count;
  }
  EXPECT_EQ(count, 11);

  const auto resume = std::filesystem::temp_directory_path() / ("trimin_cli_resume_" + std::to_string(::getpid()));
  std::ofstream(resume) << "5,0\n5,1\n5,2\n";
  const CliRun rest = run("oracle --n 5 --resume " + resume.string());
  ASSERT_EQ(rest.code, 0) << rest.err;
  EXPECT_EQ(std::count(rest.out.begin(), rest.out.end(), '\n'), 8);
  const std::string done = slurp(resume);
  EXPECT_EQ(std::count(done.begin(), done.end(), '\n'), 11);
  const CliRun again = run("oracle --n 5 --resume " + resume.string());
  EXPECT_EQ(again.out, "");

  const CliRun all = run("oracle --n 6 --e 12 --all-extremal --jobs 2");
  const auto j = nlohmann::json::parse(all.out);
  EXPECT_EQ(j["g3"], 8);
  EXPECT_EQ(j["extremal"].size(), j["extremal_count"].get<std::size_t>());
}

TEST(Cli, VerifyConjecture) {
  const CliRun r = run("verify --suite conjecture --n-max 7");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS 7/7 orders"), std::string::npos);
  const CliRun s = run("verify --suite slopes --n-max 30");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.rfind("PASS", 0), 0U);
}

TEST(Cli, Analyze) {
  const std::string h = run("construct --n 6 --e 10").out;
  const CliRun r = run("analyze --k 3 --exact", h);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("analyze_6_10.json"));
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["cut_edges"].get<int>() + j["bad"].get<int>(), 10);
}

TEST(Cli, Symmetrise) {
  const auto part = std::filesystem::temp_directory_path() / ("trimin_cli_part_" + std::to_string(::getpid()));
  std::ofstream(part) << R"({"parts": [[0, 1, 2], [3, 4, 5]]})";
  // K_{3,3} plus the edge 0-1 inside a side.
  const std::string k33_plus = "Efz_\n";
  const CliRun check = run("member --family h0", k33_plus);
  ASSERT_EQ(check.code, 0) << check.err;
  const CliRun r = run("symmetrise --partition " + part.string(), k33_plus);
  ASSERT_EQ(r.code, 0) << r.err;
  const CliRun h = run("member --family hstar", r.out);
  EXPECT_TRUE(nlohmann::json::parse(h.out)["member"].get<bool>()) << r.out;
  const CliRun j = run("symmetrise --format json --partition " + part.string(), k33_plus);
  EXPECT_TRUE(nlohmann::json::parse(j.out).contains("parts"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("profile --n 5 --e 3 --bogus").code, 2);
  EXPECT_EQ(run("profile --n 5").code, 2);
  const CliRun dom = run("profile --n 4 --e 7");
  EXPECT_EQ(dom.code, 1);
  EXPECT_FALSE(dom.err.empty());
  EXPECT_TRUE(dom.out.empty());
  EXPECT_EQ(run("oracle --n 10 --e 3").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ByteIdenticalReruns) {
  for (const std::string args : {"profile --n 9 --all-e --format csv", "oracle --n 6",
                                 "verify --suite identities --n-max 5 --seed 9",
                                 "curves --steps 57 --format json"}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
  const std::string g = "I~~~~~~~~\n";  // nothing special, just dense
  EXPECT_EQ(run("analyze --k 3 --seed 5", g).out, run("analyze --k 3 --seed 5", g).out);
}

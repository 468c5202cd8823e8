// Copyright 2026 The hypafib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypafib/cli.hpp"
#include "hypafib/errors.hpp"

namespace hypafib {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(Cli, WordCommand) {
  EXPECT_EQ(run({"word", "--q", "6", "--family", "fib4q", "--i", "4"}).out, "00100010001\n");
  EXPECT_EQ(run({"word", "--family", "classic", "--i", "0"}).out, "1\n");
  EXPECT_EQ(run({"word", "--q", "7", "--prefix", "20"}).out, "00010000100001000010\n");
  EXPECT_EQ(run({"word", "--family", "biperiodic", "--a", "3", "--b", "2", "--i", "2"}).out, "001\n");
  EXPECT_EQ(run({"word", "--q", "6", "--i", "4", "--prefix", "3"}).code, cli::kUsageError);
  EXPECT_EQ(run({"word", "--i", "4"}).code, cli::kUsageError);
}

TEST(Cli, WordJson) {
  const Result r = run({"word", "--q", "6", "--i", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["q"], 6);
  EXPECT_EQ(j["i"], 4);
  EXPECT_EQ(j["word"], "00100010001");
  EXPECT_EQ(j["length"], 11);
}

TEST(Cli, RowCommand) {
  EXPECT_EQ(run({"row", "--q", "5", "--n", "4", "--pattern"}).out, "BABABBABAB\n");
  EXPECT_EQ(run({"row", "--q", "6", "--n", "2", "--values"}).out, "1 2 1\n");
  const Result bad = run({"row", "--q", "4", "--n", "1"});
  EXPECT_EQ(bad.code, cli::kUsageError);
  EXPECT_NE(bad.err.find(kDegenerateQMessage), std::string::npos);
  EXPECT_EQ(run({"row", "--q", "3", "--n", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"row", "--q", "5", "--n", "1", "--format", "dot"}).code, cli::kUsageError);
  const auto j = nlohmann::json::parse(run({"row", "--q", "6", "--n", "2", "--format", "json"}).out);
  EXPECT_EQ(j["kinds"], "BAB");
  EXPECT_EQ(j["values"], (nlohmann::json{"1", "2", "1"}));
}

TEST(Cli, VerifyCommand) {
  const Result r = run({"verify", "--theorem", "equivalence", "--q", "5..7", "--depth", "8"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const auto reports = nlohmann::json::parse(r.out);
  ASSERT_EQ(reports.size(), 3U);
  for (const auto& rep : reports) EXPECT_TRUE(rep["pass"].get<bool>());
  EXPECT_EQ(reports[0]["q"], 5);
  EXPECT_EQ(reports[2]["q"], 7);

  EXPECT_EQ(run({"verify", "--theorem", "lemmas", "--q", "5..12", "--depth", "40"}).code, cli::kSuccess);
  EXPECT_EQ(run({"verify", "--theorem", "properties", "--q", "6", "--depth", "10"}).code, cli::kSuccess);
  EXPECT_EQ(run({"verify", "--theorem", "bogus", "--q", "6"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "--theorem", "lemmas", "--q", "4..6"}).code, cli::kUsageError);
}

TEST(Cli, DensityCommand) {
  const Result r = run({"density", "--q", "5", "--precision", "12"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("r0 = 1.618033988750\n"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"density", "--q", "5", "--index", "1", "--format", "json"}).out);
  EXPECT_TRUE(j["empirical"]["r1_empirical"].is_null());
  EXPECT_TRUE(j["empirical"]["gap1"].is_null());
  const auto j25 = nlohmann::json::parse(run({"density", "--q", "6", "--index", "25", "--format", "json"}).out);
  EXPECT_LT(std::stod(j25["empirical"]["gap0"].get<std::string>()), 1e-6);
  EXPECT_EQ(run({"density", "--q", "4"}).code, cli::kUsageError);
}

TEST(Cli, GraphCommand) {
  const Result dot = run({"graph", "--q", "6", "--n", "5", "--dot"});
  ASSERT_EQ(dot.code, 0);
  std::size_t arrows = 0;
  for (std::size_t p = dot.out.find("->"); p != std::string::npos; p = dot.out.find("->", p + 1)) ++arrows;
  EXPECT_EQ(arrows, 110U);
  const Result single = run({"graph", "--q", "5", "--n", "0"});
  EXPECT_NE(single.out.find("v0_0 [label=\"v0_0 [1] (base)\"]"), std::string::npos);
  EXPECT_EQ(single.out.find("->"), std::string::npos);
  EXPECT_EQ(run({"graph", "--q", "5", "--n", "2", "--format", "text"}).code, cli::kUsageError);
  EXPECT_EQ(run({"graph", "--q", "5", "--n", "2", "--dot", "--format", "json"}).code, cli::kUsageError);
}

TEST(Cli, CapacityExitCode) {
  ::setenv("HYPAFIB_MAX_NODES", "100", 1);
  const Result r = run({"graph", "--q", "6", "--n", "6"});
  ::unsetenv("HYPAFIB_MAX_NODES");
  EXPECT_EQ(r.code, cli::kCapacityError);

  ::setenv("HYPAFIB_MAX_WORD_LEN", "1000", 1);
  const Result w = run({"word", "--q", "6", "--i", "14"});
  ::unsetenv("HYPAFIB_MAX_WORD_LEN");
  EXPECT_EQ(w.code, cli::kCapacityError);

  ::setenv("HYPAFIB_MAX_WORD_LEN", "lots", 1);
  const Result bad = run({"word", "--q", "6", "--i", "1"});
  ::unsetenv("HYPAFIB_MAX_WORD_LEN");
  EXPECT_EQ(bad.code, cli::kUsageError);
}

TEST(Cli, JsonOutputIsCanonical) {
  const std::vector<std::vector<std::string>> commands = {
      {"word", "--q", "7", "--prefix", "30", "--format", "json"},
      {"row", "--q", "5", "--n", "4", "--format", "json"},
      {"verify", "--theorem", "ominus", "--q", "6", "--depth", "3"},
      {"density", "--q", "7", "--format", "json"},
      {"graph", "--q", "5", "--n", "3", "--format", "json"},
  };
  for (const auto& c : commands) {
    const Result r = run(c);
    ASSERT_EQ(r.code, 0) << c[0] << ": " << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out).dump() + "\n", r.out) << c[0];
  }
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(run({"--help"}).code, cli::kSuccess); }

}  // namespace
}  // namespace hypafib

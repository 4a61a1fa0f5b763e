// Copyright 2026 The LabelDense Authors
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
#include "labeldense/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "labeldense/io.h"

namespace labeldense {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const char* name) {
  return std::string(LABELDENSE_DATA_DIR) + "/" + name;
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("labeldense_cli_" + name)).string();
}

TEST(CliTest, GreedyAndOnExample) {
  const Outcome o = Invoke({"greedy-and", "--input", Data("fig1_left.tsv"), "--trace"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["result"]["labels"], nlohmann::json({"l1", "l2"}));
  EXPECT_EQ(j["result"]["density_fraction"], "8/5");
  EXPECT_EQ(j["result"]["density"], 1.6);
  EXPECT_EQ(j["trace"].size(), 2u);
}

TEST(CliTest, OracleDisjunctive) {
  const Outcome o = Invoke({"oracle", "--mode", "disjunctive", "--input", Data("fig1_right.tsv")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(nlohmann::json::parse(o.out)["result"]["density"], 1.4);
}

TEST(CliTest, GreedyOrSelectionsAgree) {
  const Outcome hull = Invoke({"greedy-or", "--input", Data("fig1_right.tsv"), "--selection", "hull"});
  const Outcome scan = Invoke({"greedy-or", "--input", Data("fig1_right.tsv"), "--selection", "scan"});
  ASSERT_EQ(hull.code, 0);
  ASSERT_EQ(scan.code, 0);
  auto a = nlohmann::json::parse(hull.out);
  auto b = nlohmann::json::parse(scan.out);
  EXPECT_EQ(a["result"], b["result"]);
  EXPECT_EQ(a["result"]["density_fraction"], "7/5");
}

TEST(CliTest, AlphaCommandsAndCsv) {
  Outcome o = Invoke({"greedy-and-alpha", "--input", Data("fig2_left.tsv"), "--alpha", "3/4"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["result"]["labels"], nlohmann::json({"l1"}));
  EXPECT_EQ(j["result"]["alpha_density_fraction"], "3/4");
  o = Invoke({"greedy-or-alpha", "--input", Data("fig2_right.tsv"), "--alpha", "1.75",
           "--format", "csv"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find(",l2,1,8,18,"), std::string::npos) << o.out;
}

TEST(CliTest, GenerateThenPeel) {
  const std::string path = TempPath("synth.tsv");
  Outcome o = Invoke({"generate", "--kind", "conjunctive", "--epsilon", "0", "--seed", "3",
                   "--output", path});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(std::filesystem::exists(path + ".manifest.json"));
  o = Invoke({"baseline-peel", "--input", path});
  ASSERT_EQ(o.code, 0) << o.err;
  auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["result"]["n"], 20);
  EXPECT_EQ(j["result"]["density"], 9.5);

  o = Invoke({"peel-repeat", "--mode", "conjunctive", "--rounds", "2", "--input", path});
  ASSERT_EQ(o.code, 0) << o.err;
  j = nlohmann::json::parse(o.out);
  ASSERT_EQ(j["reports"].size(), 2u);
  EXPECT_EQ(j["reports"][1]["result"]["density_fraction"], "9/2");

  o = Invoke({"max-alpha", "--mode", "conjunctive", "--input", path});
  ASSERT_EQ(o.code, 0) << o.err;
  j = nlohmann::json::parse(o.out);
  EXPECT_LT(j["alpha_star"].get<double>(), 9.5);
  EXPECT_GE(j["alpha_star"].get<double>(), 9.499);
  EXPECT_EQ(j["reports"][0]["result"]["n"], 20);

  const std::string filtered = TempPath("filtered.tsv");
  o = Invoke({"filter", "--min-fraction", "0.5", "--input", path, "--output", filtered});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(ReadGraphFile(filtered).num_labels(), 5u);  // each target is on 370 of 415 edges
  std::filesystem::remove(path);
  std::filesystem::remove(path + ".manifest.json");
  std::filesystem::remove(filtered);
}

TEST(CliTest, InduceReportsCounts) {
  const Outcome o = Invoke({"induce", "--mode", "conjunctive", "--labels", "l1,l2", "--input",
                         Data("fig1_left.tsv")});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["result"]["n"], 5);
  EXPECT_EQ(j["result"]["m"], 8);
}

TEST(CliTest, ErrorsAreJsonWithExitCodes) {
  Outcome o = Invoke({"greedy-and", "--input", "/nonexistent.tsv"});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(nlohmann::json::parse(o.err)["error"]["kind"], "input");
  o = Invoke({"greedy-and", "--bogus"});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(nlohmann::json::parse(o.err)["error"]["kind"], "usage");
  o = Invoke({"oracle", "--mode", "conjunctive", "--max-labels", "1", "--input",
           Data("fig1_left.tsv")});
  EXPECT_EQ(o.code, 2);
  EXPECT_EQ(nlohmann::json::parse(o.err)["error"]["kind"], "guard");
  o = Invoke({"induce", "--labels", "nope", "--input", Data("fig1_left.tsv")});
  EXPECT_EQ(o.code, 1);
}

TEST(CliTest, SweepRuns) {
  const Outcome o = Invoke({"sweep", "--kind", "disjunctive", "--epsilons", "0", "--seeds", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["cells"], 2);
  EXPECT_EQ(j["recovered"], 2);
}

}  // namespace
}  // namespace labeldense

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
#include "labeldense/search.h"

#include <gtest/gtest.h>

#include <cstdlib>

#include "labeldense/errors.h"
#include "labeldense/io.h"
#include "labeldense/oracle.h"
#include "labeldense/synthgen.h"

namespace labeldense {
namespace {

LabeledGraph Fixture(const char* name) {
  return ReadGraphFile(std::string(LABELDENSE_DATA_DIR) + "/" + name);
}

void ExpectPostcondition(const LabeledGraph& g, InduceMode mode, const Rational& tol,
                         const MaxAlphaResult& r, bool exact = false) {
  EXPECT_FALSE(AlphaBest(g, mode, r.alpha_star, exact).labels.empty());
  EXPECT_TRUE(AlphaBest(g, mode, r.alpha_star + tol, exact).labels.empty());
}

TEST(MaxAlphaTest, Triangle) {
  const LabeledGraph g = ParseGraphText("a\tb\tx\nb\tc\tx\nc\ta\tx\n");
  const Rational tol(1, 10000);
  const MaxAlphaResult r = MaxAlphaSearch(g, InduceMode::kConjunctive, tol);
  EXPECT_LT(r.alpha_star, Rational(1));
  EXPECT_GE(r.alpha_star, Rational(1) - tol);
  ExpectPostcondition(g, InduceMode::kConjunctive, tol, r);
  EXPECT_EQ(r.quarter_alpha, r.alpha_star / Rational(4));
}

TEST(MaxAlphaTest, TriangleOutlivesPath) {
  const LabeledGraph g = Fixture("fig2_left.tsv");
  const Rational tol(1, 10000);
  for (bool exact : {false, true}) {
    const MaxAlphaResult r = MaxAlphaSearch(g, InduceMode::kConjunctive, tol, exact);
    EXPECT_LT(r.alpha_star, Rational(1));
    EXPECT_GE(r.alpha_star, Rational(1) - tol);
    EXPECT_EQ(r.at_star.labels, std::vector<LabelId>{*g.FindLabel("l1")});
    ExpectPostcondition(g, InduceMode::kConjunctive, tol, r, exact);
  }
}

TEST(MaxAlphaTest, CleanConjunctiveInstance) {
  const SynthInstance inst = GenConjunctive(0.0, 6);
  const Rational tol(1, 10000);
  const MaxAlphaResult r = MaxAlphaSearch(inst.graph, InduceMode::kConjunctive, tol);
  EXPECT_LT(r.alpha_star, Rational(19, 2));
  EXPECT_GE(r.alpha_star, Rational(19, 2) - Rational(1, 1000));
  EXPECT_EQ(r.at_star.n, 20);
  EXPECT_EQ(r.at_star.m, 190);
}

TEST(MaxAlphaTest, RejectsBadInput) {
  const LabeledGraph g = ParseGraphText("a\tb\tx\n");
  EXPECT_THROW(MaxAlphaSearch(g, InduceMode::kConjunctive, Rational(0)), InputError);
  EXPECT_THROW(MaxAlphaSearch(LabeledGraph(), InduceMode::kConjunctive, Rational(1, 10)),
               InputError);
}

TEST(PeelRepeatTest, CleanConjunctiveInstance) {
  const SynthInstance inst = GenConjunctive(0.0, 1);
  const auto rounds = PeelRepeat(inst.graph, InduceMode::kConjunctive, 2);
  ASSERT_EQ(rounds.size(), 2u);
  EXPECT_EQ(rounds[0].run.best_objective, Rational(19, 2));
  EXPECT_EQ(rounds[0].run.best_n, 20);
  // Every remaining small clique ties at 45/10; the shortest prefix wins.
  EXPECT_EQ(rounds[1].run.best_objective, Rational(9, 2));
  EXPECT_EQ(rounds[1].edges_before, 225u);
}

TEST(PeelRepeatTest, StopsWhenEdgesRunOut) {
  const LabeledGraph g = Fixture("fig1_right.tsv");
  const auto rounds = PeelRepeat(g, InduceMode::kDisjunctive, 50);
  EXPECT_LT(rounds.size(), 50u);
  int64_t total = 0;
  for (const PeelRound& r : rounds) total += r.run.best_m;
  EXPECT_LE(total, static_cast<int64_t>(g.num_edges()));
  EXPECT_THROW(PeelRepeat(g, InduceMode::kDisjunctive, 0), InputError);
}

TEST(SweepTest, SameResultsForAnyWorkerCount) {
  const std::vector<double> eps = {0.0, 0.1};
  const std::vector<uint64_t> seeds = {0, 1, 2};
  const auto one = RunSweep(SynthKind::kConjunctive, eps, seeds, Selection::kHull, 1);
  const auto many = RunSweep(SynthKind::kConjunctive, eps, seeds, Selection::kHull, 4);
  ASSERT_EQ(one.size(), 6u);
  for (size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].run, many[i].run);
    EXPECT_EQ(one[i].seed, many[i].seed);
  }
  EXPECT_EQ(one[0].run.best_objective, Rational(19, 2));
}

TEST(SweepTest, ThreadsFromEnvironment) {
  setenv("LABELDENSE_THREADS", "3", 1);
  EXPECT_EQ(SweepThreads(), 3u);
  setenv("LABELDENSE_THREADS", "zero", 1);
  EXPECT_GE(SweepThreads(), 1u);
  unsetenv("LABELDENSE_THREADS");
}

}  // namespace
}  // namespace labeldense

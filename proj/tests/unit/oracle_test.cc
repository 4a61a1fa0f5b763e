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
#include "labeldense/oracle.h"

#include <gtest/gtest.h>

#include <vector>

#include "labeldense/errors.h"
#include "labeldense/io.h"
#include "labeldense/synthgen.h"
#include "testing/reference.h"

namespace labeldense {
namespace {

LabeledGraph Fixture(const char* name) {
  return ReadGraphFile(std::string(LABELDENSE_DATA_DIR) + "/" + name);
}

std::vector<LabelId> Ids(const LabeledGraph& g, std::vector<std::string> names) {
  std::vector<LabelId> out;
  for (const auto& n : names) out.push_back(*g.FindLabel(n));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ExactLabelSearchTest, FigureExamples) {
  LabeledGraph g = Fixture("fig1_left.tsv");
  LabelSearchResult r = ExactLabelSearch(g, InduceMode::kConjunctive, ObjectiveKind::kRatio);
  EXPECT_EQ(r.labels, Ids(g, {"l1", "l2"}));
  EXPECT_EQ(r.value, Rational(8, 5));

  g = Fixture("fig1_right.tsv");
  r = ExactLabelSearch(g, InduceMode::kDisjunctive, ObjectiveKind::kRatio);
  EXPECT_EQ(r.labels, Ids(g, {"l1", "l2"}));
  EXPECT_EQ(r.value, Rational(7, 5));

  g = Fixture("fig2_right.tsv");
  r = ExactLabelSearch(g, InduceMode::kDisjunctive, ObjectiveKind::kAlpha, Rational(7, 4));
  EXPECT_EQ(r.labels, Ids(g, {"l2"}));
  EXPECT_EQ(r.value, Rational(4));
}

// Every subset, evaluated independently with the naive induce.
testing::Counts BestByBruteForce(const LabeledGraph& g, InduceMode mode, ObjectiveKind kind,
                                 const Rational& alpha, Rational* value,
                                 std::vector<LabelId>* labels) {
  bool have = false;
  testing::Counts best;
  for (uint32_t mask = 1; mask < (1u << g.num_labels()); ++mask) {
    std::vector<LabelId> set;
    for (LabelId l = 0; l < g.num_labels(); ++l) {
      if (mask >> l & 1) set.push_back(l);
    }
    const testing::Counts c = testing::NaiveInduce(g, mode, set);
    const Rational v = testing::ObjectiveOf(c, kind, alpha);
    const bool better = !have || v > *value ||
                        (v == *value && (set.size() < labels->size() ||
                                         (set.size() == labels->size() && set < *labels)));
    if (better) {
      have = true;
      *value = v;
      *labels = set;
      best = c;
    }
  }
  return best;
}

TEST(ExactLabelSearchTest, MatchesBruteForce) {
  for (uint64_t seed = 0; seed < 80; ++seed) {
    const LabeledGraph g = testing::RandomGraph(seed, 20, 8);
    for (InduceMode mode : {InduceMode::kConjunctive, InduceMode::kDisjunctive}) {
      for (ObjectiveKind kind : {ObjectiveKind::kRatio, ObjectiveKind::kAlpha}) {
        const Rational alpha(3, 2);
        Rational value;
        std::vector<LabelId> labels;
        const testing::Counts c = BestByBruteForce(g, mode, kind, alpha, &value, &labels);
        const LabelSearchResult r = ExactLabelSearch(g, mode, kind, alpha);
        EXPECT_EQ(r.value, value) << seed;
        EXPECT_EQ(r.labels, labels) << seed;
        EXPECT_EQ(r.n, c.n);
        EXPECT_EQ(r.m, c.m);
      }
    }
  }
}

TEST(ExactLabelSearchTest, GuardRefuses) {
  std::string text;
  for (int i = 0; i < 21; ++i) text += "a\tb" + std::to_string(i) + "\tx" + std::to_string(i) + "\n";
  const LabeledGraph g = ParseGraphText(text);
  try {
    ExactLabelSearch(g, InduceMode::kConjunctive, ObjectiveKind::kRatio);
    FAIL();
  } catch (const GuardError& e) {
    EXPECT_NE(std::string(e.what()).find("2^21"), std::string::npos);
  }
  EXPECT_NO_THROW(ExactLabelSearch(g, InduceMode::kConjunctive, ObjectiveKind::kRatio,
                                   Rational(0), 21));
}

TEST(ExactDensestTest, SmallGraphs) {
  LabeledGraph g = ParseGraphText("a\tb\tx\nb\tc\tx\nc\ta\tx\nc\td\tx\n");
  VertexSetResult r = ExactDensestSubgraphSmall(g);
  EXPECT_EQ(r.density, Rational(1));
  ASSERT_EQ(r.vertices.size(), 3u);
  for (const char* v : {"a", "b", "c"}) {
    EXPECT_NE(std::find(r.vertices.begin(), r.vertices.end(), *g.FindVertex(v)),
              r.vertices.end());
  }
  g = ParseGraphText("a\tb\tx\n");
  r = ExactDensestSubgraphSmall(g);
  EXPECT_EQ(r.density, Rational(1, 2));
  EXPECT_EQ(r.vertices.size(), 2u);

  std::string k5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5 += "v" + std::to_string(i) + "\tv" + std::to_string(j) + "\tx\n";
  g = ParseGraphText(k5);
  r = ExactDensestSubgraphSmall(g);
  EXPECT_EQ(r.density, Rational(2));
  EXPECT_EQ(r.vertices.size(), 5u);
  const VertexSetResult p = PeelDensest(g);
  EXPECT_EQ(p.density, Rational(2));
  EXPECT_EQ(p.vertices.size(), 5u);
}

TEST(ExactDensestTest, GuardRefuses) {
  std::string text;
  for (int i = 0; i < 19; ++i) text += "c\tv" + std::to_string(i) + "\tx\n";
  EXPECT_THROW(ExactDensestSubgraphSmall(ParseGraphText(text)), GuardError);
}

TEST(PeelDensestTest, WithinFactorTwoOfExact) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const LabeledGraph g = testing::RandomGraph(seed, 18, 3);
    const VertexSetResult exact = ExactDensestSubgraphSmall(g);
    const VertexSetResult peel = PeelDensest(g);
    EXPECT_LE(peel.density, exact.density);
    EXPECT_GE(peel.density * Rational(2), exact.density) << seed;
    // The reported set really has that density.
    int64_t m = 0;
    std::vector<char> in(g.num_vertices(), 0);
    for (VertexId v : peel.vertices) in[v] = 1;
    for (EdgeId e = 0; e < g.num_edges(); ++e) m += in[g.edge_u(e)] && in[g.edge_v(e)];
    EXPECT_EQ(m, peel.m);
    EXPECT_EQ(Density(static_cast<int64_t>(peel.vertices.size()), m), peel.density);
  }
}

TEST(PeelDensestTest, FindsLargeCliqueInCleanInstance) {
  const SynthInstance inst = GenConjunctive(0.0, 2);
  const VertexSetResult r = PeelDensest(inst.graph);
  EXPECT_EQ(r.vertices.size(), 20u);
  EXPECT_EQ(r.density, Rational(19, 2));
}

TEST(OracleDominanceTest, GreedyNeverBeatsOracle) {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const LabeledGraph g = testing::RandomGraph(seed);
    const Rational alpha(1);
    auto opt = [&](InduceMode mode, ObjectiveKind kind) {
      return std::max(ExactLabelSearch(g, mode, kind, alpha).value, Rational(0));
    };
    EXPECT_LE(GreedyAnd(g).best_objective, opt(InduceMode::kConjunctive, ObjectiveKind::kRatio));
    EXPECT_LE(GreedyOr(g).best_objective, opt(InduceMode::kDisjunctive, ObjectiveKind::kRatio));
    EXPECT_LE(GreedyAndAlpha(g, alpha).best_objective,
              opt(InduceMode::kConjunctive, ObjectiveKind::kAlpha));
    EXPECT_LE(GreedyOrAlpha(g, alpha).best_objective,
              opt(InduceMode::kDisjunctive, ObjectiveKind::kAlpha));
  }
}

}  // namespace
}  // namespace labeldense

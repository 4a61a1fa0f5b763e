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
#include "labeldense/synthgen.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "labeldense/errors.h"
#include "labeldense/io.h"
#include "labeldense/oracle.h"

namespace labeldense {
namespace {

std::vector<LabelId> SortedTargets(const SynthInstance& inst) {
  std::vector<LabelId> t = inst.target_labels;
  std::sort(t.begin(), t.end());
  return t;
}

int64_t PlantedEdges(const SynthInstance& inst) {
  std::vector<int> owner(inst.graph.num_vertices(), -1);
  for (size_t c = 0; c < inst.cliques.size(); ++c) {
    for (VertexId v : inst.cliques[c]) owner[v] = static_cast<int>(c);
  }
  int64_t count = 0;
  for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) {
    const int a = owner[inst.graph.edge_u(e)];
    count += a >= 0 && a == owner[inst.graph.edge_v(e)];
  }
  return count;
}

TEST(GenConjunctiveTest, CleanInstanceShape) {
  for (uint64_t seed : {0u, 1u, 2u}) {
    const SynthInstance inst = GenConjunctive(0.0, seed);
    EXPECT_EQ(inst.graph.num_vertices(), 200u);
    EXPECT_EQ(inst.graph.num_labels(), 50u);
    EXPECT_EQ(inst.graph.num_edges(), 415u);
    ASSERT_EQ(inst.cliques.size(), 6u);
    EXPECT_EQ(inst.cliques[5].size(), 20u);
    EXPECT_EQ(inst.target_n, 20);
    EXPECT_EQ(inst.target_m, 190);
    EXPECT_EQ(inst.target_density, Rational(19, 2));
    std::set<LabelId> distinct(inst.target_labels.begin(), inst.target_labels.end());
    EXPECT_EQ(distinct.size(), kNumTargets);
    // Small clique k misses target k.
    const InducedSubgraph s = Induce(inst.graph, InduceMode::kConjunctive,
                                     std::vector<LabelId>{inst.target_labels[0]});
    EXPECT_EQ(s.m, 190 + 4 * 45);
  }
}

TEST(GenConjunctiveTest, FullNoiseRemovesEveryPlantedEdge) {
  const SynthInstance inst = GenConjunctive(1.0, 5);
  EXPECT_EQ(PlantedEdges(inst), 0);
  EXPECT_EQ(inst.graph.num_edges(), 200u * 199u / 2u - 415u);
}

TEST(GenConjunctiveTest, PlantedEdgeCountFallsLinearly) {
  for (double eps : {0.1, 0.3, 0.5}) {
    double sum = 0;
    const int runs = 50;
    for (int seed = 0; seed < runs; ++seed) {
      sum += static_cast<double>(PlantedEdges(GenConjunctive(eps, 1000 + seed)));
    }
    const double mean = sum / runs;
    const double expected = 415.0 * (1.0 - eps);
    const double sigma = std::sqrt(415.0 * eps * (1.0 - eps) / runs);
    EXPECT_NEAR(mean, expected, 3 * sigma) << eps;
  }
}

TEST(GenDisjunctiveTest, CleanInstanceShape) {
  const SynthInstance inst = GenDisjunctive(0.0, 3);
  EXPECT_EQ(inst.graph.num_edges(), 780u);
  EXPECT_EQ(inst.target_n, 40);
  EXPECT_EQ(inst.target_m, 780);
  EXPECT_EQ(inst.target_density, Rational(39, 2));
  for (LabelId t : inst.target_labels) {
    EXPECT_EQ(inst.graph.label_edges(t).size(), 156u);
  }
}

TEST(SynthgenTest, DeterministicPerSeed) {
  const std::string a = SerializeGraph(GenConjunctive(0.15, 9).graph);
  const std::string b = SerializeGraph(GenConjunctive(0.15, 9).graph);
  const std::string c = SerializeGraph(GenConjunctive(0.15, 10).graph);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(SerializeGraph(GenDisjunctive(0.3, 1).graph),
            SerializeGraph(GenDisjunctive(0.3, 1).graph));
}

TEST(SynthgenTest, ScalingMatchesDefaultsAtBaseSize) {
  EXPECT_EQ(SerializeGraph(GenScaling(SynthKind::kConjunctive, 0.2, 4, 200, 50).graph),
            SerializeGraph(GenConjunctive(0.2, 4).graph));
  EXPECT_EQ(SerializeGraph(GenScaling(SynthKind::kDisjunctive, 0.2, 4, 200, 50).graph),
            SerializeGraph(GenDisjunctive(0.2, 4).graph));
}

TEST(SynthgenTest, ScalingKeepsNoiseDegree) {
  const SynthInstance inst = GenScaling(SynthKind::kConjunctive, 0.2, 1, 10000, 1000);
  EXPECT_EQ(inst.graph.num_vertices(), 10000u);
  const int64_t noise = static_cast<int64_t>(inst.graph.num_edges()) - PlantedEdges(inst);
  EXPECT_EQ(noise, 199000);  // 0.2 * 199 * 10000 / 2
  EXPECT_TRUE(ScalingSizesInRange(10000, 1000));
  EXPECT_FALSE(ScalingSizesInRange(200, 50));
}

TEST(SynthgenTest, RejectsBadParameters) {
  EXPECT_THROW(GenConjunctive(-0.1, 0), InputError);
  EXPECT_THROW(GenConjunctive(1.5, 0), InputError);
  EXPECT_THROW(GenConjunctive(0.1, 0, 60), InputError);
  EXPECT_THROW(GenDisjunctive(0.1, 0, 39), InputError);
  EXPECT_THROW(GenDisjunctive(0.1, 0, 200, 4), InputError);
}

TEST(SynthgenTest, ReducedInstancesOracleFindsTargets) {
  const CliqueSizes mini{3, 6, 12};
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const SynthInstance conj = GenConjunctive(0.0, seed, 30, 8, mini);
    LabelSearchResult r =
        ExactLabelSearch(conj.graph, InduceMode::kConjunctive, ObjectiveKind::kRatio);
    EXPECT_EQ(r.labels, SortedTargets(conj));
    EXPECT_EQ(r.value, Rational(15, 6));

    const SynthInstance disj = GenDisjunctive(0.0, seed, 30, 8, mini);
    r = ExactLabelSearch(disj.graph, InduceMode::kDisjunctive, ObjectiveKind::kRatio);
    EXPECT_EQ(r.labels, SortedTargets(disj));
    EXPECT_EQ(r.value, Rational(66, 12));
  }
}

}  // namespace
}  // namespace labeldense

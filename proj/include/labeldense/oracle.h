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
// Exhaustive solvers for small instances and the label-blind peeling
// baseline.

#ifndef LABELDENSE_ORACLE_H_
#define LABELDENSE_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "labeldense/graph.h"
#include "labeldense/greedy.h"
#include "labeldense/rational.h"

namespace labeldense {

inline constexpr size_t kDefaultMaxLabels = 20;
inline constexpr size_t kDefaultMaxVertices = 18;

struct LabelSearchResult {
  std::vector<LabelId> labels;  // sorted; empty only when g has no labels
  Rational value;
  int64_t n = 0;
  int64_t m = 0;
};

// Best non-empty label set under the ratio or alpha objective. Ties go to
// fewer labels, then the lexicographically smallest set. Throws GuardError
// when |L| exceeds max_labels.
LabelSearchResult ExactLabelSearch(const LabeledGraph& g, InduceMode mode,
                                   ObjectiveKind kind,
                                   const Rational& alpha = Rational(0),
                                   size_t max_labels = kDefaultMaxLabels);

struct VertexSetResult {
  std::vector<VertexId> vertices;  // sorted
  Rational density;
  int64_t m = 0;
};

// Densest vertex subset by enumeration. Ties go to fewer vertices, then the
// lexicographically smallest set. Throws GuardError above max_vertices.
VertexSetResult ExactDensestSubgraphSmall(
    const LabeledGraph& g, size_t max_vertices = kDefaultMaxVertices);

// Repeatedly removes a minimum-degree vertex and keeps the densest subgraph
// seen; at least half the optimum. Later, smaller subgraphs win ties.
VertexSetResult PeelDensest(const LabeledGraph& g);

}  // namespace labeldense

#endif  // LABELDENSE_ORACLE_H_

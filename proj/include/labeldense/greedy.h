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
// Greedy label selection for conjunctive and disjunctive induction, with
// ratio density m/n or alpha density m - alpha*n as the objective.

#ifndef LABELDENSE_GREEDY_H_
#define LABELDENSE_GREEDY_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "labeldense/graph.h"
#include "labeldense/rational.h"

namespace labeldense {

enum class ObjectiveKind { kRatio, kAlpha };

// How GreedyOr finds the next label.
enum class Selection { kHull, kScan };

std::string_view SelectionName(Selection selection);
Selection ParseSelection(std::string_view text);

struct GreedyStep {
  LabelId label = 0;
  int64_t n = 0;  // vertices of the prefix ending with this label
  int64_t m = 0;
  Rational objective;

  friend bool operator==(const GreedyStep&, const GreedyStep&) = default;
};

struct GreedyRun {
  InduceMode mode = InduceMode::kConjunctive;
  ObjectiveKind kind = ObjectiveKind::kRatio;
  Rational alpha;  // zero for the ratio objective
  std::vector<GreedyStep> steps;
  // Length of the best prefix. Prefix 0 is the empty subgraph with objective
  // 0; on ties the shortest prefix wins.
  size_t best_index = 0;
  std::vector<LabelId> best_labels;  // sorted
  int64_t best_n = 0;
  int64_t best_m = 0;
  Rational best_objective;

  friend bool operator==(const GreedyRun&, const GreedyRun&) = default;
};

// Counters of the graph induced by chosen + {label}.
struct CandidateCounts {
  LabelId label = 0;
  int64_t n = 0;
  int64_t m = 0;
};

// Snapshot handed to an observer before every selection. Candidates cover
// every label not chosen yet, in label order.
struct IterationView {
  std::span<const LabelId> chosen;
  std::span<const CandidateCounts> candidates;
};

using GreedyObserver = std::function<void(const IterationView&)>;

GreedyRun GreedyAnd(const LabeledGraph& g, const GreedyObserver& observer = {});

GreedyRun GreedyOr(const LabeledGraph& g, Selection selection = Selection::kHull,
                   const GreedyObserver& observer = {});

GreedyRun GreedyAndAlpha(const LabeledGraph& g, const Rational& alpha,
                         const GreedyObserver& observer = {});

GreedyRun GreedyOrAlpha(const LabeledGraph& g, const Rational& alpha,
                        const GreedyObserver& observer = {});

}  // namespace labeldense

#endif  // LABELDENSE_GREEDY_H_

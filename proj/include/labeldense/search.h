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
// Drivers built on the greedy searches: the max-alpha bisection, repeated
// extraction with edge removal, and seed/epsilon sweeps over synthetic
// instances.

#ifndef LABELDENSE_SEARCH_H_
#define LABELDENSE_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "labeldense/graph.h"
#include "labeldense/greedy.h"
#include "labeldense/rational.h"
#include "labeldense/synthgen.h"

namespace labeldense {

struct AlphaPick {
  std::vector<LabelId> labels;  // sorted; empty means the empty subgraph
  int64_t n = 0;
  int64_t m = 0;
  Rational value;  // alpha density
};

// Best label set at a fixed alpha, found greedily or, with exact, by the
// exhaustive search (subject to its guard).
AlphaPick AlphaBest(const LabeledGraph& g, InduceMode mode,
                    const Rational& alpha, bool exact);

struct MaxAlphaResult {
  Rational alpha_star;
  AlphaPick at_star;
  Rational quarter_alpha;  // alpha_star / 4
  AlphaPick at_quarter;
  size_t evaluations = 0;
};

// Largest alpha (to within tol) whose best pick is non-empty. Bisection over
// [0, |E|] with exact dyadic midpoints; afterwards alpha_star + tol is
// checked and the search steps on while it is still non-empty, so the
// result is non-empty at alpha_star and empty at alpha_star + tol even when
// the greedy predicate is not monotone. Throws InputError for tol <= 0 or a
// graph without edges.
MaxAlphaResult MaxAlphaSearch(const LabeledGraph& g, InduceMode mode,
                              const Rational& tol, bool exact = false);

struct PeelRound {
  GreedyRun run;            // label ids are those of the input graph
  size_t edges_before = 0;  // edges left when the round started
};

// Runs the ratio greedy for the mode, deletes the edges of the subgraph it
// returns, and repeats. Stops after `rounds` rounds or when no edge is left.
std::vector<PeelRound> PeelRepeat(const LabeledGraph& g, InduceMode mode,
                                  size_t rounds,
                                  Selection selection = Selection::kHull);

struct SweepCell {
  double epsilon = 0;
  uint64_t seed = 0;
  std::vector<LabelId> targets;  // sorted
  Rational target_density;
  GreedyRun run;
  double runtime_ms = 0;  // greedy only, generation excluded
};

// Worker count from LABELDENSE_THREADS, else the hardware concurrency;
// never below 1.
size_t SweepThreads();

// Generates one instance per (epsilon, seed) and runs the mode's ratio
// greedy on it. Cells come back in epsilon-major order regardless of how
// many workers ran them.
std::vector<SweepCell> RunSweep(SynthKind kind,
                                const std::vector<double>& epsilons,
                                const std::vector<uint64_t>& seeds,
                                Selection selection, size_t threads,
                                size_t total_vertices = 200,
                                size_t total_labels = 50);

}  // namespace labeldense

#endif  // LABELDENSE_SEARCH_H_

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
// Slow, independent reimplementations used as test oracles.

#ifndef LABELDENSE_TESTING_REFERENCE_H_
#define LABELDENSE_TESTING_REFERENCE_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "labeldense/graph.h"
#include "labeldense/greedy.h"
#include "labeldense/rational.h"

namespace labeldense::testing {

struct Counts {
  int64_t n = 0;
  int64_t m = 0;
  friend bool operator==(const Counts&, const Counts&) = default;
};

// Edge predicate evaluated with std::set; vertices collected from scratch.
// The empty conjunction is taken to select no edges, matching how greedy
// prefixes are scored.
inline Counts NaiveInduce(const LabeledGraph& g, InduceMode mode,
                          const std::vector<LabelId>& labels) {
  Counts c;
  if (labels.empty()) return c;
  const std::set<LabelId> want(labels.begin(), labels.end());
  std::set<VertexId> vertices;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto span = g.edge_labels(e);
    const std::set<LabelId> have(span.begin(), span.end());
    bool in;
    if (mode == InduceMode::kConjunctive) {
      in = std::includes(have.begin(), have.end(), want.begin(), want.end());
    } else {
      in = std::any_of(want.begin(), want.end(),
                       [&](LabelId l) { return have.count(l) != 0; });
    }
    if (!in) continue;
    ++c.m;
    vertices.insert(g.edge_u(e));
    vertices.insert(g.edge_v(e));
  }
  c.n = static_cast<int64_t>(vertices.size());
  return c;
}

inline Rational ObjectiveOf(const Counts& c, ObjectiveKind kind,
                            const Rational& alpha) {
  if (kind == ObjectiveKind::kRatio) {
    return c.n == 0 ? Rational(0) : Rational(c.m, c.n);
  }
  return Rational(c.m) - alpha * Rational(c.n);
}

// Greedy by recomputation: every round evaluates every remaining label with
// NaiveInduce. Conjunctive rounds rank A+{l} by the objective; disjunctive
// ratio rounds do the same, disjunctive alpha rounds rank the gain in
// m - alpha*n. Labels adding no edge end the run, except for the
// disjunctive ratio greedy, which then takes every leftover label in id
// order. Ties go to the smallest label.
inline GreedyRun ReferenceGreedy(const LabeledGraph& g, InduceMode mode,
                                 ObjectiveKind kind,
                                 const Rational& alpha = Rational(0)) {
  GreedyRun run;
  run.mode = mode;
  run.kind = kind;
  run.alpha = kind == ObjectiveKind::kAlpha ? alpha : Rational(0);
  std::vector<LabelId> chosen;
  std::vector<char> used(g.num_labels(), 0);
  Counts current;
  for (;;) {
    std::optional<LabelId> best;
    Rational best_key;
    Counts best_counts;
    for (LabelId l = 0; l < g.num_labels(); ++l) {
      if (used[l]) continue;
      std::vector<LabelId> trial = chosen;
      trial.push_back(l);
      const Counts c = NaiveInduce(g, mode, trial);
      if (mode == InduceMode::kConjunctive ? c.m == 0 : c.m == current.m) continue;
      Rational key;
      if (mode == InduceMode::kDisjunctive && kind == ObjectiveKind::kAlpha) {
        key = Rational(c.m - current.m) - alpha * Rational(c.n - current.n);
      } else {
        key = ObjectiveOf(c, kind, alpha);
      }
      if (!best || key > best_key) {
        best = l;
        best_key = key;
        best_counts = c;
      }
    }
    if (!best && mode == InduceMode::kDisjunctive &&
        kind == ObjectiveKind::kRatio) {
      for (LabelId l = 0; l < g.num_labels() && !best; ++l) {
        if (!used[l]) best = l;
      }
      best_counts = current;
    }
    if (!best) break;
    used[*best] = 1;
    chosen.push_back(*best);
    current = best_counts;
    const Rational value = ObjectiveOf(current, kind, alpha);
    run.steps.push_back({*best, current.n, current.m, value});
    if (value > run.best_objective) {
      run.best_objective = value;
      run.best_index = run.steps.size();
      run.best_n = current.n;
      run.best_m = current.m;
    }
  }
  run.best_labels.assign(chosen.begin(), chosen.begin() + run.best_index);
  std::sort(run.best_labels.begin(), run.best_labels.end());
  return run;
}

// Random graph with at most max_vertices vertices, num_labels labels and
// 1..max_per_edge labels per edge.
inline LabeledGraph RandomGraph(uint64_t seed, size_t max_vertices = 50,
                                size_t max_labels = 10, size_t max_per_edge = 4) {
  std::mt19937_64 rng(seed);
  auto below = [&](size_t n) { return static_cast<size_t>(rng() % n); };
  const size_t nv = 2 + below(max_vertices - 1);
  const size_t nl = 1 + below(max_labels);
  const double p = 0.05 + 0.5 * static_cast<double>(below(1000)) / 1000.0;
  std::vector<std::string> vertex_names(nv), label_names(nl);
  for (size_t v = 0; v < nv; ++v) vertex_names[v] = "v" + std::to_string(v);
  for (size_t l = 0; l < nl; ++l) label_names[l] = "l" + std::to_string(l);
  // A few labels are made popular so that conjunctions are non-trivial.
  std::vector<LabeledGraph::RawEdge> edges;
  for (VertexId u = 0; u < nv; ++u) {
    for (VertexId v = u + 1; v < nv; ++v) {
      if (static_cast<double>(rng() % 1000000) / 1e6 >= p) continue;
      const size_t k = 1 + below(std::min(max_per_edge, nl));
      std::vector<LabelId> labels;
      while (labels.size() < k) {
        LabelId l = below(3) == 0 ? static_cast<LabelId>(below(std::min<size_t>(nl, 3)))
                                  : static_cast<LabelId>(below(nl));
        if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
      }
      edges.push_back({u, v, labels});
    }
  }
  if (edges.empty()) edges.push_back({0, 1, {0}});
  return LabeledGraph::FromParts(vertex_names, label_names, edges);
}

}  // namespace labeldense::testing

#endif  // LABELDENSE_TESTING_REFERENCE_H_

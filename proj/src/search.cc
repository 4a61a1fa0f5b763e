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

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "labeldense/errors.h"
#include "labeldense/oracle.h"

namespace labeldense {

AlphaPick AlphaBest(const LabeledGraph& g, InduceMode mode,
                    const Rational& alpha, bool exact) {
  AlphaPick pick;
  if (exact) {
    const LabelSearchResult r =
        ExactLabelSearch(g, mode, ObjectiveKind::kAlpha, alpha);
    // The exhaustive search only looks at non-empty sets; the empty
    // subgraph (value 0) wins when nothing is positive.
    if (r.value > Rational(0)) {
      pick.labels = r.labels;
      pick.n = r.n;
      pick.m = r.m;
      pick.value = r.value;
    }
    return pick;
  }
  const GreedyRun run = mode == InduceMode::kConjunctive
                            ? GreedyAndAlpha(g, alpha)
                            : GreedyOrAlpha(g, alpha);
  pick.labels = run.best_labels;
  pick.n = run.best_n;
  pick.m = run.best_m;
  pick.value = run.best_objective;
  return pick;
}

MaxAlphaResult MaxAlphaSearch(const LabeledGraph& g, InduceMode mode,
                              const Rational& tol, bool exact) {
  if (tol <= Rational(0)) throw InputError("tolerance must be positive");
  MaxAlphaResult result;
  auto probe = [&](const Rational& alpha) {
    ++result.evaluations;
    return AlphaBest(g, mode, alpha, exact);
  };
  AlphaPick low_pick = probe(Rational(0));
  if (low_pick.labels.empty()) {
    throw InputError("no label set is non-empty at alpha = 0 (graph has no edges)");
  }
  // Every non-empty subgraph has m <= |E| and n >= 2, so alpha = |E| is empty.
  Rational lo(0);
  Rational hi(static_cast<int64_t>(g.num_edges()));
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / Rational(2);
    AlphaPick pick = probe(mid);
    if (pick.labels.empty()) {
      hi = mid;
    } else {
      lo = mid;
      low_pick = std::move(pick);
    }
  }
  for (;;) {
    AlphaPick next = probe(lo + tol);
    if (next.labels.empty()) break;
    lo = lo + tol;
    low_pick = std::move(next);
  }
  result.alpha_star = lo;
  result.at_star = std::move(low_pick);
  result.quarter_alpha = lo / Rational(4);
  result.at_quarter = probe(result.quarter_alpha);
  return result;
}

std::vector<PeelRound> PeelRepeat(const LabeledGraph& g, InduceMode mode,
                                  size_t rounds, Selection selection) {
  if (rounds == 0) throw InputError("rounds must be at least 1");
  std::vector<PeelRound> out;
  LabeledGraph current = g;
  for (size_t i = 0; i < rounds && current.num_edges() > 0; ++i) {
    PeelRound round;
    round.edges_before = current.num_edges();
    round.run = mode == InduceMode::kConjunctive ? GreedyAnd(current)
                                                 : GreedyOr(current, selection);
    if (round.run.best_labels.empty()) break;
    const InducedSubgraph taken = Induce(current, mode, round.run.best_labels);
    out.push_back(std::move(round));
    current = WithoutEdges(current, taken.edges);
  }
  return out;
}

size_t SweepThreads() {
  if (const char* env = std::getenv("LABELDENSE_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<size_t>(value);
  }
  return std::max<size_t>(1, std::thread::hardware_concurrency());
}

std::vector<SweepCell> RunSweep(SynthKind kind,
                                const std::vector<double>& epsilons,
                                const std::vector<uint64_t>& seeds,
                                Selection selection, size_t threads,
                                size_t total_vertices, size_t total_labels) {
  std::vector<SweepCell> cells;
  for (const double eps : epsilons) {
    for (const uint64_t seed : seeds) cells.push_back({eps, seed, {}, {}, {}, 0});
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (size_t i = next++; i < cells.size(); i = next++) {
      try {
        SweepCell& c = cells[i];
        const SynthInstance inst =
            kind == SynthKind::kConjunctive
                ? GenConjunctive(c.epsilon, c.seed, total_vertices, total_labels)
                : GenDisjunctive(c.epsilon, c.seed, total_vertices, total_labels);
        c.targets = inst.target_labels;
        std::sort(c.targets.begin(), c.targets.end());
        c.target_density = inst.target_density;
        const auto start = std::chrono::steady_clock::now();
        c.run = kind == SynthKind::kConjunctive ? GreedyAnd(inst.graph)
                                                : GreedyOr(inst.graph, selection);
        c.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const size_t workers = std::max<size_t>(1, std::min(threads, cells.size()));
  std::vector<std::thread> pool;
  for (size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return cells;
}

}  // namespace labeldense

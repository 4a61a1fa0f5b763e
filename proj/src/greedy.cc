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
#include "labeldense/greedy.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "labeldense/hull.h"

namespace labeldense {
namespace {

using i128 = __int128;

// Exact objective over counters (n, m). Candidates with m = 0 rank below
// everything else and tie with each other.
class Objective {
 public:
  static Objective Ratio() { return Objective(ObjectiveKind::kRatio, 0); }
  static Objective Alpha(const Rational& alpha) {
    return Objective(ObjectiveKind::kAlpha, alpha);
  }

  ObjectiveKind kind() const { return kind_; }
  const Rational& alpha() const { return alpha_; }

  int Compare(int64_t n1, int64_t m1, int64_t n2, int64_t m2) const {
    if (m1 == 0 || m2 == 0) return (m1 != 0) - (m2 != 0);
    i128 a, b;
    if (kind_ == ObjectiveKind::kRatio) {
      a = static_cast<i128>(m1) * n2;
      b = static_cast<i128>(m2) * n1;
    } else {
      a = static_cast<i128>(alpha_.den()) * m1 -
          static_cast<i128>(alpha_.num()) * n1;
      b = static_cast<i128>(alpha_.den()) * m2 -
          static_cast<i128>(alpha_.num()) * n2;
    }
    return (a > b) - (a < b);
  }

  Rational Value(int64_t n, int64_t m) const {
    return kind_ == ObjectiveKind::kRatio ? Density(n, m)
                                          : AlphaDensity(n, m, alpha_);
  }

 private:
  Objective(ObjectiveKind kind, Rational alpha)
      : kind_(kind), alpha_(alpha) {}

  ObjectiveKind kind_;
  Rational alpha_;
};

class RunBuilder {
 public:
  RunBuilder(InduceMode mode, const Objective& objective)
      : objective_(objective) {
    run_.mode = mode;
    run_.kind = objective.kind();
    run_.alpha = objective.alpha();
  }

  void Add(LabelId label, int64_t n, int64_t m) {
    const Rational value = objective_.Value(n, m);
    run_.steps.push_back({label, n, m, value});
    if (value > run_.best_objective) {
      run_.best_objective = value;
      run_.best_index = run_.steps.size();
      run_.best_n = n;
      run_.best_m = m;
    }
  }

  GreedyRun Finish() {
    for (size_t i = 0; i < run_.best_index; ++i) {
      run_.best_labels.push_back(run_.steps[i].label);
    }
    std::sort(run_.best_labels.begin(), run_.best_labels.end());
    return std::move(run_);
  }

 private:
  Objective objective_;
  GreedyRun run_;
};

void Report(const GreedyObserver& observer, const std::vector<LabelId>& chosen,
            const std::vector<char>& is_chosen,
            const std::function<CandidateCounts(LabelId)>& counts) {
  std::vector<CandidateCounts> candidates;
  for (LabelId l = 0; l < is_chosen.size(); ++l) {
    if (!is_chosen[l]) candidates.push_back(counts(l));
  }
  observer(IterationView{chosen, candidates});
}

GreedyRun RunAnd(const LabeledGraph& g, const Objective& objective,
                 const GreedyObserver& observer) {
  const size_t num_labels = g.num_labels();
  const size_t num_vertices = g.num_vertices();
  const size_t num_edges = g.num_edges();
  RunBuilder run(InduceMode::kConjunctive, objective);

  std::vector<int64_t> n(num_labels), m(num_labels);
  for (LabelId l = 0; l < num_labels; ++l) {
    n[l] = static_cast<int64_t>(g.label_vertices(l).size());
    m[l] = static_cast<int64_t>(g.label_edges(l).size());
  }

  // r[slot] counts the surviving l-edges at v, one slot per (v, l in S_v).
  std::vector<size_t> vertex_base(num_vertices + 1, 0);
  for (VertexId v = 0; v < num_vertices; ++v) {
    vertex_base[v + 1] = vertex_base[v] + g.vertex_labels(v).size();
  }
  auto slot = [&](VertexId v, LabelId l) {
    const auto labels = g.vertex_labels(v);
    return vertex_base[v] +
           static_cast<size_t>(std::lower_bound(labels.begin(), labels.end(), l) -
                               labels.begin());
  };
  std::vector<int32_t> r(vertex_base[num_vertices], 0);
  std::vector<size_t> pair_base(num_edges + 1, 0);
  std::vector<size_t> slot_u(g.num_edge_label_pairs());
  std::vector<size_t> slot_v(g.num_edge_label_pairs());
  for (EdgeId e = 0; e < num_edges; ++e) {
    const auto labels = g.edge_labels(e);
    pair_base[e + 1] = pair_base[e] + labels.size();
    for (size_t j = 0; j < labels.size(); ++j) {
      const size_t su = slot(g.edge_u(e), labels[j]);
      const size_t sv = slot(g.edge_v(e), labels[j]);
      slot_u[pair_base[e] + j] = su;
      slot_v[pair_base[e] + j] = sv;
      ++r[su];
      ++r[sv];
    }
  }

  auto better = [&](LabelId a, LabelId b) {
    const int c = objective.Compare(n[a], m[a], n[b], m[b]);
    return c != 0 ? c > 0 : a < b;
  };
  std::set<LabelId, decltype(better)> queue(better);
  for (LabelId l = 0; l < num_labels; ++l) queue.insert(l);

  std::vector<EdgeId> alive(num_edges);
  std::iota(alive.begin(), alive.end(), EdgeId{0});
  std::vector<char> is_chosen(num_labels, 0);
  std::vector<char> touched(num_labels, 0);
  std::vector<LabelId> chosen, changed;

  while (!queue.empty()) {
    if (observer) {
      Report(observer, chosen, is_chosen, [&](LabelId l) {
        return CandidateCounts{l, n[l], m[l]};
      });
    }
    const LabelId k = *queue.begin();
    if (m[k] == 0) break;
    queue.erase(queue.begin());
    is_chosen[k] = 1;
    chosen.push_back(k);
    run.Add(k, n[k], m[k]);

    // Every surviving edge carries all chosen labels; the ones without k
    // leave for good.
    size_t kept = 0;
    for (const EdgeId e : alive) {
      if (g.EdgeHasLabel(e, k)) {
        alive[kept++] = e;
        continue;
      }
      const auto labels = g.edge_labels(e);
      for (size_t j = 0; j < labels.size(); ++j) {
        const LabelId l = labels[j];
        if (is_chosen[l]) continue;
        if (!touched[l]) {
          touched[l] = 1;
          queue.erase(l);
          changed.push_back(l);
        }
        --m[l];
        if (--r[slot_u[pair_base[e] + j]] == 0) --n[l];
        if (--r[slot_v[pair_base[e] + j]] == 0) --n[l];
      }
    }
    alive.resize(kept);
    for (const LabelId l : changed) {
      touched[l] = 0;
      queue.insert(l);
    }
    changed.clear();
  }
  return run.Finish();
}

// Current disjunctive subgraph and the gains (n_k, m_k) of adding each label.
class OrState {
 public:
  explicit OrState(const LabeledGraph& g)
      : g_(g),
        gain_n_(g.num_labels()),
        gain_m_(g.num_labels()),
        in_edge_(g.num_edges(), 0),
        in_vertex_(g.num_vertices(), 0),
        touched_(g.num_labels(), 0) {
    for (LabelId l = 0; l < g.num_labels(); ++l) {
      gain_n_[l] = static_cast<int64_t>(g.label_vertices(l).size());
      gain_m_[l] = static_cast<int64_t>(g.label_edges(l).size());
    }
  }

  int64_t n() const { return n_; }
  int64_t m() const { return m_; }
  int64_t gain_n(LabelId l) const { return gain_n_[l]; }
  int64_t gain_m(LabelId l) const { return gain_m_[l]; }
  bool has_edge(EdgeId e) const { return in_edge_[e] != 0; }
  bool has_vertex(VertexId v) const { return in_vertex_[v] != 0; }

  // Adds E(k). before_change(l) runs once per label, ahead of the first
  // change to its gains; the touched labels are returned.
  template <typename F>
  const std::vector<LabelId>& Add(LabelId k, F&& before_change) {
    for (const LabelId l : changed_) touched_[l] = 0;
    changed_.clear();
    auto touch = [&](LabelId l) {
      if (touched_[l]) return;
      touched_[l] = 1;
      before_change(l);
      changed_.push_back(l);
    };
    for (const EdgeId e : g_.label_edges(k)) {
      if (in_edge_[e]) continue;
      in_edge_[e] = 1;
      ++m_;
      for (const LabelId l : g_.edge_labels(e)) {
        touch(l);
        --gain_m_[l];
      }
      for (const VertexId v : {g_.edge_u(e), g_.edge_v(e)}) {
        if (in_vertex_[v]) continue;
        in_vertex_[v] = 1;
        ++n_;
        for (const LabelId l : g_.vertex_labels(v)) {
          touch(l);
          --gain_n_[l];
        }
      }
    }
    return changed_;
  }

 private:
  const LabeledGraph& g_;
  int64_t n_ = 0;
  int64_t m_ = 0;
  std::vector<int64_t> gain_n_, gain_m_;
  std::vector<char> in_edge_, in_vertex_, touched_;
  std::vector<LabelId> changed_;
};

GreedyRun RunOrRatio(const LabeledGraph& g, Selection selection,
                     const GreedyObserver& observer) {
  const size_t num_labels = g.num_labels();
  const Objective objective = Objective::Ratio();
  RunBuilder run(InduceMode::kDisjunctive, objective);
  OrState state(g);
  std::vector<char> is_chosen(num_labels, 0);
  std::vector<LabelId> chosen;

  // The loop runs while labels remain. Once no label adds an edge, the rest
  // follow in id order as no-op steps; they never change the best prefix.
  DynamicHull hull;
  std::vector<LabelId> remaining;  // scan candidates, in id order
  for (LabelId l = 0; l < num_labels; ++l) {
    if (selection == Selection::kScan) {
      remaining.push_back(l);
    } else if (state.gain_m(l) > 0) {
      hull.Insert({l, state.gain_m(l), state.gain_n(l)});
    }
  }
  LabelId next_idle = 0;  // hull path: smallest label not yet chosen

  std::vector<CandidateCounts> fresh;
  while (chosen.size() < num_labels) {
    if (observer) {
      Report(observer, chosen, is_chosen, [&](LabelId l) {
        return CandidateCounts{l, state.n() + state.gain_n(l),
                               state.m() + state.gain_m(l)};
      });
    }
    LabelId k;
    if (selection == Selection::kHull) {
      if (!hull.empty()) {
        k = hull.QueryBest(state.m(), state.n()).label;
        hull.Erase(k);
      } else {
        while (is_chosen[next_idle]) ++next_idle;
        k = next_idle;
      }
    } else {
      // Naive selection: every remaining label is recounted from the graph,
      // O(p) per round. The maintained gains are only used by the hull.
      fresh.clear();
      for (const LabelId l : remaining) {
        if (is_chosen[l]) continue;
        int64_t gm = 0, gn = 0;
        for (const EdgeId e : g.label_edges(l)) gm += !state.has_edge(e);
        for (const VertexId v : g.label_vertices(l)) gn += !state.has_vertex(v);
        fresh.push_back({l, gn, gm});
      }
      // Zero edge gain ranks below everything; ties keep the smaller label.
      const CandidateCounts* best = &fresh[0];
      for (const CandidateCounts& c : fresh) {
        if (c.m == 0) continue;
        if (best->m == 0 ||
            objective.Compare(state.n() + c.n, state.m() + c.m,
                              state.n() + best->n, state.m() + best->m) > 0) {
          best = &c;
        }
      }
      k = best->label;
    }
    is_chosen[k] = 1;
    chosen.push_back(k);
    const auto& changed = state.Add(k, [](LabelId) {});
    run.Add(k, state.n(), state.m());
    if (selection != Selection::kHull) continue;
    for (const LabelId l : changed) {
      if (is_chosen[l]) continue;
      if (state.gain_m(l) == 0) {
        if (hull.Contains(l)) hull.Erase(l);
      } else {
        hull.Update(l, state.gain_m(l), state.gain_n(l));
      }
    }
  }
  return run.Finish();
}

GreedyRun RunOrAlpha(const LabeledGraph& g, const Rational& alpha,
                     const GreedyObserver& observer) {
  const size_t num_labels = g.num_labels();
  const Objective objective = Objective::Alpha(alpha);
  RunBuilder run(InduceMode::kDisjunctive, objective);
  OrState state(g);
  std::vector<char> is_chosen(num_labels, 0);
  std::vector<LabelId> chosen;

  auto better = [&](LabelId a, LabelId b) {
    const int c = objective.Compare(state.gain_n(a), state.gain_m(a),
                                    state.gain_n(b), state.gain_m(b));
    return c != 0 ? c > 0 : a < b;
  };
  std::set<LabelId, decltype(better)> queue(better);
  for (LabelId l = 0; l < num_labels; ++l) {
    if (state.gain_m(l) > 0) queue.insert(l);
  }

  while (!queue.empty()) {
    if (observer) {
      Report(observer, chosen, is_chosen, [&](LabelId l) {
        return CandidateCounts{l, state.n() + state.gain_n(l),
                               state.m() + state.gain_m(l)};
      });
    }
    const LabelId k = *queue.begin();
    queue.erase(queue.begin());
    is_chosen[k] = 1;
    chosen.push_back(k);
    const auto& changed =
        state.Add(k, [&](LabelId l) { if (!is_chosen[l]) queue.erase(l); });
    run.Add(k, state.n(), state.m());
    for (const LabelId l : changed) {
      if (!is_chosen[l] && state.gain_m(l) > 0) queue.insert(l);
    }
  }
  return run.Finish();
}

}  // namespace

std::string_view SelectionName(Selection selection) {
  return selection == Selection::kHull ? "hull" : "scan";
}

Selection ParseSelection(std::string_view text) {
  if (text == "hull") return Selection::kHull;
  if (text == "scan") return Selection::kScan;
  throw std::invalid_argument("unknown selection '" + std::string(text) +
                              "' (expected hull or scan)");
}

GreedyRun GreedyAnd(const LabeledGraph& g, const GreedyObserver& observer) {
  return RunAnd(g, Objective::Ratio(), observer);
}

GreedyRun GreedyOr(const LabeledGraph& g, Selection selection,
                   const GreedyObserver& observer) {
  return RunOrRatio(g, selection, observer);
}

GreedyRun GreedyAndAlpha(const LabeledGraph& g, const Rational& alpha,
                         const GreedyObserver& observer) {
  return RunAnd(g, Objective::Alpha(alpha), observer);
}

GreedyRun GreedyOrAlpha(const LabeledGraph& g, const Rational& alpha,
                        const GreedyObserver& observer) {
  return RunOrAlpha(g, alpha, observer);
}

}  // namespace labeldense

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

#include <algorithm>
#include <bit>
#include <string>

#include "labeldense/errors.h"

namespace labeldense {
namespace {

bool ShortlexLess(const std::vector<uint32_t>& a,
                  const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<uint32_t> BitsOf(uint64_t mask) {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

}  // namespace

LabelSearchResult ExactLabelSearch(const LabeledGraph& g, InduceMode mode,
                                   ObjectiveKind kind, const Rational& alpha,
                                   size_t max_labels) {
  const size_t num_labels = g.num_labels();
  // Hard caps keep the bitmasks and tables addressable.
  if (num_labels > max_labels || num_labels > 40) {
    throw GuardError("exact label search needs 2^" +
                     std::to_string(num_labels) + " subset evaluations; " +
                     "limit is " + std::to_string(max_labels) + " labels");
  }
  LabelSearchResult best;
  if (num_labels == 0) return best;

  // Subsets are visited in Gray-code order so each step flips one label.
  // cnt[e] is |B ∩ labels(e)|; hist and per-vertex histograms give the
  // conjunctive counts, covered/n_or the disjunctive ones.
  const size_t num_vertices = g.num_vertices();
  const size_t width = num_labels + 1;
  std::vector<uint32_t> cnt(g.num_edges(), 0);
  std::vector<int64_t> hist(width, 0);
  hist[0] = static_cast<int64_t>(g.num_edges());
  std::vector<int32_t> vertex_hist(num_vertices * width, 0);
  std::vector<int32_t> covered(num_vertices, 0);
  for (VertexId v = 0; v < num_vertices; ++v) {
    vertex_hist[v * width] = static_cast<int32_t>(g.vertex_edges(v).size());
  }
  int64_t n_or = 0;

  auto shift = [&](EdgeId e, int delta) {
    const uint32_t before = cnt[e];
    const uint32_t after = before + delta;
    cnt[e] = after;
    --hist[before];
    ++hist[after];
    for (const VertexId v : {g.edge_u(e), g.edge_v(e)}) {
      --vertex_hist[v * width + before];
      ++vertex_hist[v * width + after];
      if (before == 0) {
        if (covered[v]++ == 0) ++n_or;
      } else if (after == 0) {
        if (--covered[v] == 0) --n_or;
      }
    }
  };

  bool have = false;
  std::vector<LabelId> best_labels;
  uint64_t mask = 0;
  const uint64_t total = uint64_t{1} << num_labels;
  for (uint64_t i = 1; i < total; ++i) {
    const LabelId flip = static_cast<LabelId>(std::countr_zero(i));
    const bool adding = !(mask >> flip & 1);
    mask ^= uint64_t{1} << flip;
    for (const EdgeId e : g.label_edges(flip)) shift(e, adding ? 1 : -1);

    int64_t n, m;
    if (mode == InduceMode::kDisjunctive) {
      m = static_cast<int64_t>(g.num_edges()) - hist[0];
      n = n_or;
    } else {
      const size_t k = static_cast<size_t>(std::popcount(mask));
      m = hist[k];
      n = 0;
      if (m > 0) {
        for (VertexId v = 0; v < num_vertices; ++v) {
          if (vertex_hist[v * width + k] > 0) ++n;
        }
      }
    }
    const Rational value = kind == ObjectiveKind::kRatio
                               ? Density(n, m)
                               : AlphaDensity(n, m, alpha);
    if (have && value < best.value) continue;
    std::vector<LabelId> labels = BitsOf(mask);
    if (have && value == best.value && !ShortlexLess(labels, best.labels)) {
      continue;
    }
    have = true;
    best.labels = std::move(labels);
    best.value = value;
    best.n = n;
    best.m = m;
  }
  return best;
}

VertexSetResult ExactDensestSubgraphSmall(const LabeledGraph& g,
                                          size_t max_vertices) {
  const size_t nv = g.num_vertices();
  if (nv > max_vertices || nv > 26) {
    throw GuardError("exact densest subgraph needs 2^" + std::to_string(nv) +
                     " subset evaluations; limit is " +
                     std::to_string(max_vertices) + " vertices");
  }
  VertexSetResult best;
  if (nv == 0) return best;
  std::vector<uint32_t> adj(nv, 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    adj[g.edge_u(e)] |= 1u << g.edge_v(e);
    adj[g.edge_v(e)] |= 1u << g.edge_u(e);
  }
  // edges[W] = edges[W minus its lowest vertex] + that vertex's degree in W.
  const uint32_t total = 1u << nv;
  std::vector<int32_t> edges(total, 0);
  uint32_t best_mask = 0;
  int64_t best_m = 0;
  for (uint32_t w = 1; w < total; ++w) {
    const int low = std::countr_zero(w);
    const uint32_t rest = w & (w - 1);
    edges[w] = edges[rest] + std::popcount(adj[low] & rest);
    const int64_t m = edges[w];
    if (best_mask != 0) {
      const int64_t bn = std::popcount(best_mask), n = std::popcount(w);
      const __int128 lhs = static_cast<__int128>(m) * bn;
      const __int128 rhs = static_cast<__int128>(best_m) * n;
      if (lhs < rhs) continue;
      if (lhs == rhs && !ShortlexLess(BitsOf(w), BitsOf(best_mask))) continue;
    }
    best_mask = w;
    best_m = m;
  }
  best.vertices = BitsOf(best_mask);
  best.m = best_m;
  best.density = Density(static_cast<int64_t>(best.vertices.size()), best_m);
  return best;
}

VertexSetResult PeelDensest(const LabeledGraph& g) {
  const size_t nv = g.num_vertices();
  VertexSetResult best;
  if (nv == 0) return best;
  std::vector<int64_t> degree(nv);
  int64_t max_degree = 0;
  for (VertexId v = 0; v < nv; ++v) {
    degree[v] = static_cast<int64_t>(g.vertex_edges(v).size());
    max_degree = std::max(max_degree, degree[v]);
  }
  // Buckets hold stale entries; an entry is live when it matches degree[v].
  std::vector<std::vector<VertexId>> buckets(max_degree + 1);
  for (VertexId v = nv; v-- > 0;) buckets[degree[v]].push_back(v);
  std::vector<char> removed(nv, 0);
  std::vector<VertexId> order;
  order.reserve(nv);

  int64_t n = static_cast<int64_t>(nv);
  int64_t m = static_cast<int64_t>(g.num_edges());
  Rational best_density = Density(n, m);
  int64_t best_m = m;
  size_t best_removed = 0;
  int64_t d = 0;
  while (n > 0) {
    VertexId v = 0;
    for (;;) {
      while (buckets[d].empty()) ++d;
      v = buckets[d].back();
      buckets[d].pop_back();
      if (!removed[v] && degree[v] == d) break;
    }
    removed[v] = 1;
    order.push_back(v);
    for (const EdgeId e : g.vertex_edges(v)) {
      const VertexId u = g.edge_u(e) == v ? g.edge_v(e) : g.edge_u(e);
      if (removed[u]) continue;
      --degree[u];
      buckets[degree[u]].push_back(u);
    }
    m -= degree[v];
    --n;
    d = std::max<int64_t>(0, d - 1);
    if (n == 0) break;
    const Rational current = Density(n, m);
    if (current >= best_density) {
      best_density = current;
      best_m = m;
      best_removed = order.size();
    }
  }
  std::vector<char> gone(nv, 0);
  for (size_t i = 0; i < best_removed; ++i) gone[order[i]] = 1;
  for (VertexId v = 0; v < nv; ++v) {
    if (!gone[v]) best.vertices.push_back(v);
  }
  best.density = best_density;
  best.m = best_m;
  return best;
}

}  // namespace labeldense

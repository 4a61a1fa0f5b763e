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
#include "labeldense/graph.h"

#include <algorithm>
#include <utility>

#include "labeldense/errors.h"

namespace labeldense {
namespace {

uint64_t PairKey(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(a) << 32) | b;
}

// Counting-sort style CSR build from (bucket, value) pairs; values within a
// bucket come out in insertion order.
template <typename T>
void BuildCsr(size_t buckets, const std::vector<std::pair<size_t, T>>& pairs,
              std::vector<size_t>& offsets, std::vector<T>& ids) {
  offsets.assign(buckets + 1, 0);
  for (const auto& [b, _] : pairs) ++offsets[b + 1];
  for (size_t i = 0; i < buckets; ++i) offsets[i + 1] += offsets[i];
  ids.resize(pairs.size());
  std::vector<size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [b, value] : pairs) ids[cursor[b]++] = value;
}

}  // namespace

std::string_view ModeName(InduceMode mode) {
  return mode == InduceMode::kConjunctive ? "conjunctive" : "disjunctive";
}

InduceMode ParseMode(std::string_view text) {
  if (text == "conjunctive" || text == "and") return InduceMode::kConjunctive;
  if (text == "disjunctive" || text == "or") return InduceMode::kDisjunctive;
  throw InputError("unknown mode '" + std::string(text) +
                   "' (expected conjunctive or disjunctive)");
}

LabeledGraph LabeledGraph::Build(std::span<const EdgeRecord> records) {
  std::vector<std::string> vertex_names;
  std::vector<std::string> label_names;
  std::unordered_map<std::string, VertexId> vertex_ids;
  std::unordered_map<std::string, LabelId> label_ids;
  auto intern = [](std::string_view name, auto& ids, auto& names) {
    auto [it, inserted] =
        ids.try_emplace(std::string(name), static_cast<uint32_t>(names.size()));
    if (inserted) names.emplace_back(name);
    return it->second;
  };

  std::vector<RawEdge> edges;
  edges.reserve(records.size());
  for (const EdgeRecord& r : records) {
    const std::string where = "line " + std::to_string(r.line) + ": ";
    if (r.u == r.v) {
      throw InputError(where + "self-loop on vertex '" + r.u + "'");
    }
    if (r.labels.empty()) throw InputError(where + "edge has no labels");
    RawEdge e;
    e.u = intern(r.u, vertex_ids, vertex_names);
    e.v = intern(r.v, vertex_ids, vertex_names);
    for (const std::string& l : r.labels) {
      if (l.empty()) throw InputError(where + "empty label name");
      e.labels.push_back(intern(l, label_ids, label_names));
    }
    edges.push_back(std::move(e));
  }
  return FromParts(std::move(vertex_names), std::move(label_names),
                   std::move(edges));
}

LabeledGraph LabeledGraph::FromParts(std::vector<std::string> vertex_names,
                                     std::vector<std::string> label_names,
                                     std::vector<RawEdge> edges) {
  LabeledGraph g;
  g.vertex_names_ = std::move(vertex_names);
  g.label_names_ = std::move(label_names);
  const size_t nv = g.vertex_names_.size();
  const size_t nl = g.label_names_.size();
  for (VertexId v = 0; v < nv; ++v) {
    if (!g.vertex_lookup_.emplace(g.vertex_names_[v], v).second) {
      throw InputError("duplicate vertex name '" + g.vertex_names_[v] + "'");
    }
  }
  for (LabelId l = 0; l < nl; ++l) {
    if (!g.label_lookup_.emplace(g.label_names_[l], l).second) {
      throw InputError("duplicate label name '" + g.label_names_[l] + "'");
    }
  }

  // Merge parallel edges; the first occurrence fixes the edge id and the
  // endpoint order.
  std::unordered_map<uint64_t, EdgeId> pair_to_edge;
  std::vector<std::vector<LabelId>> labels;
  for (RawEdge& e : edges) {
    if (e.u >= nv || e.v >= nv) throw InputError("vertex id out of range");
    if (e.u == e.v) throw InputError("self-loop on vertex '" +
                                     g.vertex_names_[e.u] + "'");
    if (e.labels.empty()) throw InputError("edge has no labels");
    for (LabelId l : e.labels) {
      if (l >= nl) throw InputError("label id out of range");
    }
    auto [it, inserted] = pair_to_edge.try_emplace(
        PairKey(e.u, e.v), static_cast<EdgeId>(g.edge_u_.size()));
    if (inserted) {
      g.edge_u_.push_back(e.u);
      g.edge_v_.push_back(e.v);
      labels.push_back(std::move(e.labels));
    } else {
      auto& merged = labels[it->second];
      merged.insert(merged.end(), e.labels.begin(), e.labels.end());
    }
  }

  const size_t ne = g.edge_u_.size();
  g.edge_label_offsets_.assign(ne + 1, 0);
  for (EdgeId e = 0; e < ne; ++e) {
    auto& ls = labels[e];
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    g.edge_label_offsets_[e + 1] = g.edge_label_offsets_[e] + ls.size();
    g.edge_label_ids_.insert(g.edge_label_ids_.end(), ls.begin(), ls.end());
  }

  std::vector<std::pair<size_t, EdgeId>> label_edge;
  std::vector<std::pair<size_t, EdgeId>> vertex_edge;
  label_edge.reserve(g.edge_label_ids_.size());
  vertex_edge.reserve(2 * ne);
  for (EdgeId e = 0; e < ne; ++e) {
    for (LabelId l : g.edge_labels(e)) label_edge.emplace_back(l, e);
    vertex_edge.emplace_back(g.edge_u_[e], e);
    vertex_edge.emplace_back(g.edge_v_[e], e);
  }
  BuildCsr(nl, label_edge, g.label_edge_offsets_, g.label_edge_ids_);
  BuildCsr(nv, vertex_edge, g.vertex_edge_offsets_, g.vertex_edge_ids_);

  // V(l) and S_v are both the distinct (vertex, label) incidences.
  std::vector<std::pair<VertexId, LabelId>> incidences;
  incidences.reserve(2 * g.edge_label_ids_.size());
  for (EdgeId e = 0; e < ne; ++e) {
    for (LabelId l : g.edge_labels(e)) {
      incidences.emplace_back(g.edge_u_[e], l);
      incidences.emplace_back(g.edge_v_[e], l);
    }
  }
  std::sort(incidences.begin(), incidences.end());
  incidences.erase(std::unique(incidences.begin(), incidences.end()),
                   incidences.end());
  std::vector<std::pair<size_t, LabelId>> vertex_label;
  std::vector<std::pair<size_t, VertexId>> label_vertex;
  vertex_label.reserve(incidences.size());
  label_vertex.reserve(incidences.size());
  for (const auto& [v, l] : incidences) {
    vertex_label.emplace_back(v, l);
    label_vertex.emplace_back(l, v);
  }
  BuildCsr(nv, vertex_label, g.vertex_label_offsets_, g.vertex_label_ids_);
  BuildCsr(nl, label_vertex, g.label_vertex_offsets_, g.label_vertex_ids_);
  return g;
}

bool LabeledGraph::EdgeHasLabel(EdgeId e, LabelId label) const {
  const auto ls = edge_labels(e);
  return std::binary_search(ls.begin(), ls.end(), label);
}

std::optional<LabelId> LabeledGraph::FindLabel(std::string_view name) const {
  auto it = label_lookup_.find(std::string(name));
  if (it == label_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> LabeledGraph::FindVertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

void LabeledGraph::CheckLabel(LabelId label) const {
  if (label >= num_labels()) {
    throw InputError("unknown label id " + std::to_string(label) +
                     " (universe has " + std::to_string(num_labels()) +
                     " labels)");
  }
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  return a.vertex_names_ == b.vertex_names_ &&
         a.label_names_ == b.label_names_ && a.edge_u_ == b.edge_u_ &&
         a.edge_v_ == b.edge_v_ &&
         a.edge_label_offsets_ == b.edge_label_offsets_ &&
         a.edge_label_ids_ == b.edge_label_ids_;
}

int64_t CountVertices(const LabeledGraph& g, std::span<const EdgeId> edges) {
  std::vector<bool> seen(g.num_vertices(), false);
  int64_t n = 0;
  for (EdgeId e : edges) {
    for (VertexId v : {g.edge_u(e), g.edge_v(e)}) {
      if (!seen[v]) {
        seen[v] = true;
        ++n;
      }
    }
  }
  return n;
}

InducedSubgraph Induce(const LabeledGraph& g, InduceMode mode,
                       std::span<const LabelId> labels) {
  InducedSubgraph s;
  s.mode = mode;
  s.labels.assign(labels.begin(), labels.end());
  std::sort(s.labels.begin(), s.labels.end());
  s.labels.erase(std::unique(s.labels.begin(), s.labels.end()),
                 s.labels.end());
  for (LabelId l : s.labels) g.CheckLabel(l);

  if (mode == InduceMode::kConjunctive) {
    if (s.labels.empty()) {
      s.edges.resize(g.num_edges());
      for (EdgeId e = 0; e < g.num_edges(); ++e) s.edges[e] = e;
    } else {
      // Filter the rarest label's edge list by the remaining labels.
      LabelId rarest = s.labels.front();
      for (LabelId l : s.labels) {
        if (g.label_edges(l).size() < g.label_edges(rarest).size()) rarest = l;
      }
      for (EdgeId e : g.label_edges(rarest)) {
        const auto have = g.edge_labels(e);
        if (std::includes(have.begin(), have.end(), s.labels.begin(),
                          s.labels.end())) {
          s.edges.push_back(e);
        }
      }
    }
  } else {
    std::vector<bool> taken(g.num_edges(), false);
    for (LabelId l : s.labels) {
      for (EdgeId e : g.label_edges(l)) {
        if (!taken[e]) {
          taken[e] = true;
          s.edges.push_back(e);
        }
      }
    }
    std::sort(s.edges.begin(), s.edges.end());
  }
  s.m = static_cast<int64_t>(s.edges.size());
  s.n = CountVertices(g, s.edges);
  return s;
}

Rational Density(int64_t n, int64_t m) {
  if (n == 0) return Rational(0);
  return Rational(m, n);
}

Rational AlphaDensity(int64_t n, int64_t m, const Rational& alpha) {
  return Rational(m) - alpha * Rational(n);
}

double AlphaDensity(const InducedSubgraph& s, double alpha) {
  return static_cast<double>(s.m) - alpha * static_cast<double>(s.n);
}

LabelSupport GetLabelSupport(const LabeledGraph& g, LabelId label) {
  g.CheckLabel(label);
  return {static_cast<int64_t>(g.label_vertices(label).size()),
          static_cast<int64_t>(g.label_edges(label).size())};
}

namespace {

// Rebuilds g keeping the given labels and edges; edges whose kept label set
// is empty and vertices without surviving edges are dropped.
LabeledGraph Restrict(const LabeledGraph& g, const std::vector<bool>& keep_label,
                      const std::vector<bool>& keep_edge, bool reintern_labels) {
  std::vector<LabelId> label_map(g.num_labels(), 0);
  std::vector<std::string> label_names;
  for (LabelId l = 0; l < g.num_labels(); ++l) {
    if (keep_label[l] || !reintern_labels) {
      label_map[l] = static_cast<LabelId>(label_names.size());
      label_names.push_back(g.label_name(l));
    }
  }

  std::vector<LabeledGraph::RawEdge> kept;
  std::vector<bool> used(g.num_vertices(), false);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!keep_edge[e]) continue;
    LabeledGraph::RawEdge raw{g.edge_u(e), g.edge_v(e), {}};
    for (LabelId l : g.edge_labels(e)) {
      if (keep_label[l]) raw.labels.push_back(label_map[l]);
    }
    if (raw.labels.empty()) continue;
    used[raw.u] = used[raw.v] = true;
    kept.push_back(std::move(raw));
  }

  std::vector<VertexId> vertex_map(g.num_vertices(), 0);
  std::vector<std::string> vertex_names;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (used[v]) {
      vertex_map[v] = static_cast<VertexId>(vertex_names.size());
      vertex_names.push_back(g.vertex_name(v));
    }
  }
  for (auto& e : kept) {
    e.u = vertex_map[e.u];
    e.v = vertex_map[e.v];
  }
  return LabeledGraph::FromParts(std::move(vertex_names),
                                 std::move(label_names), std::move(kept));
}

}  // namespace

LabeledGraph FilterRareLabels(const LabeledGraph& g,
                              const Rational& min_edge_fraction) {
  if (min_edge_fraction < Rational(0) || min_edge_fraction > Rational(1)) {
    throw InputError("min edge fraction must lie in [0, 1], got " +
                     min_edge_fraction.ToString());
  }
  std::vector<bool> keep_label(g.num_labels(), false);
  const __int128 total = static_cast<__int128>(g.num_edges());
  for (LabelId l = 0; l < g.num_labels(); ++l) {
    // |E(l)| < fraction * |E|, cross-multiplied.
    const __int128 lhs =
        static_cast<__int128>(g.label_edges(l).size()) * min_edge_fraction.den();
    keep_label[l] = !(lhs < total * min_edge_fraction.num());
  }
  return Restrict(g, keep_label, std::vector<bool>(g.num_edges(), true),
                  /*reintern_labels=*/true);
}

LabeledGraph WithoutEdges(const LabeledGraph& g,
                          std::span<const EdgeId> removed) {
  std::vector<bool> keep_edge(g.num_edges(), true);
  for (EdgeId e : removed) keep_edge.at(e) = false;
  return Restrict(g, std::vector<bool>(g.num_labels(), true), keep_edge,
                  /*reintern_labels=*/false);
}

}  // namespace labeldense

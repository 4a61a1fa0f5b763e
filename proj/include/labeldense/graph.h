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
#ifndef LABELDENSE_GRAPH_H_
#define LABELDENSE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "labeldense/rational.h"

namespace labeldense {

using VertexId = uint32_t;
using EdgeId = uint32_t;
using LabelId = uint32_t;

// One input line before interning. `line` is used only for diagnostics.
struct EdgeRecord {
  std::string u;
  std::string v;
  std::vector<std::string> labels;
  size_t line = 0;
};

enum class InduceMode { kConjunctive, kDisjunctive };

std::string_view ModeName(InduceMode mode);
// Accepts "conjunctive"/"and" and "disjunctive"/"or".
InduceMode ParseMode(std::string_view text);

// Immutable undirected graph whose edges carry non-empty label sets.
//
// Vertex and label ids are dense and assigned in first-appearance order.
// Every per-label and per-vertex index is built once at construction, so all
// accessors are O(1) and the object is safe for concurrent reads.
class LabeledGraph {
 public:
  struct RawEdge {
    VertexId u;
    VertexId v;
    std::vector<LabelId> labels;
  };

  LabeledGraph() = default;

  // Interns names, merges duplicate undirected pairs by label union and
  // rejects self-loops or empty label lists (InputError naming the line).
  static LabeledGraph Build(std::span<const EdgeRecord> records);

  // Builds from already-interned parts. The universes may contain isolated
  // vertices and labels that occur on no edge.
  static LabeledGraph FromParts(std::vector<std::string> vertex_names,
                                std::vector<std::string> label_names,
                                std::vector<RawEdge> edges);

  size_t num_vertices() const { return vertex_names_.size(); }
  size_t num_edges() const { return edge_u_.size(); }
  size_t num_labels() const { return label_names_.size(); }
  // p: the number of (edge, label) incidences.
  size_t num_edge_label_pairs() const { return edge_label_ids_.size(); }

  VertexId edge_u(EdgeId e) const { return edge_u_[e]; }
  VertexId edge_v(EdgeId e) const { return edge_v_[e]; }
  // Sorted ascending.
  std::span<const LabelId> edge_labels(EdgeId e) const {
    return Slice(edge_label_offsets_, edge_label_ids_, e);
  }
  bool EdgeHasLabel(EdgeId e, LabelId label) const;

  // E(l), ascending edge ids.
  std::span<const EdgeId> label_edges(LabelId label) const {
    return Slice(label_edge_offsets_, label_edge_ids_, label);
  }
  // V(l), ascending vertex ids.
  std::span<const VertexId> label_vertices(LabelId label) const {
    return Slice(label_vertex_offsets_, label_vertex_ids_, label);
  }
  // Labels occurring on edges incident to v, ascending.
  std::span<const LabelId> vertex_labels(VertexId v) const {
    return Slice(vertex_label_offsets_, vertex_label_ids_, v);
  }
  std::span<const EdgeId> vertex_edges(VertexId v) const {
    return Slice(vertex_edge_offsets_, vertex_edge_ids_, v);
  }

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string& label_name(LabelId l) const { return label_names_[l]; }
  std::optional<LabelId> FindLabel(std::string_view name) const;
  std::optional<VertexId> FindVertex(std::string_view name) const;

  // Throws InputError if `label` is not in the universe.
  void CheckLabel(LabelId label) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

 private:
  template <typename T>
  static std::span<const T> Slice(const std::vector<size_t>& offsets,
                                  const std::vector<T>& ids, size_t i) {
    return std::span<const T>(ids.data() + offsets[i],
                              offsets[i + 1] - offsets[i]);
  }

  std::vector<std::string> vertex_names_;
  std::vector<std::string> label_names_;
  std::unordered_map<std::string, VertexId> vertex_lookup_;
  std::unordered_map<std::string, LabelId> label_lookup_;

  std::vector<VertexId> edge_u_;
  std::vector<VertexId> edge_v_;
  std::vector<size_t> edge_label_offsets_;
  std::vector<LabelId> edge_label_ids_;

  std::vector<size_t> label_edge_offsets_;
  std::vector<EdgeId> label_edge_ids_;
  std::vector<size_t> label_vertex_offsets_;
  std::vector<VertexId> label_vertex_ids_;

  std::vector<size_t> vertex_label_offsets_;
  std::vector<LabelId> vertex_label_ids_;
  std::vector<size_t> vertex_edge_offsets_;
  std::vector<EdgeId> vertex_edge_ids_;
};

// The subgraph G(f, B) for f = ind_and or ind_or.
struct InducedSubgraph {
  InduceMode mode = InduceMode::kConjunctive;
  std::vector<LabelId> labels;  // B, sorted
  std::vector<EdgeId> edges;    // E(B), sorted
  int64_t n = 0;                // |V(B)|
  int64_t m = 0;                // |E(B)|
};

// Conjunctive: edges carrying every label of B (all edges when B is empty).
// Disjunctive: edges sharing at least one label with B (none when B is
// empty). Unknown label ids raise InputError.
InducedSubgraph Induce(const LabeledGraph& g, InduceMode mode,
                       std::span<const LabelId> labels);

// Number of distinct endpoints of `edges`.
int64_t CountVertices(const LabeledGraph& g, std::span<const EdgeId> edges);

// m / n, with the empty graph defined to have density 0.
Rational Density(int64_t n, int64_t m);
inline Rational Density(const InducedSubgraph& s) { return Density(s.n, s.m); }

// m - alpha * n.
Rational AlphaDensity(int64_t n, int64_t m, const Rational& alpha);
inline Rational AlphaDensity(const InducedSubgraph& s, const Rational& alpha) {
  return AlphaDensity(s.n, s.m, alpha);
}
double AlphaDensity(const InducedSubgraph& s, double alpha);

struct LabelSupport {
  int64_t vertices = 0;
  int64_t edges = 0;
};
LabelSupport GetLabelSupport(const LabeledGraph& g, LabelId label);

// Drops labels with |E(l)| < min_edge_fraction * |E|, then edges left without
// labels, then isolated vertices. Surviving ids keep their relative order.
LabeledGraph FilterRareLabels(const LabeledGraph& g,
                              const Rational& min_edge_fraction);

// Removes the given edges and any vertex left without edges. The label
// universe is kept intact.
LabeledGraph WithoutEdges(const LabeledGraph& g,
                          std::span<const EdgeId> removed);

}  // namespace labeldense

#endif  // LABELDENSE_GRAPH_H_

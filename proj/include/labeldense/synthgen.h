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
// Seeded synthetic instances with planted dense label sets.
//
// Conjunctive: five small cliques, the k-th carrying every target label but
// the k-th, plus one larger clique carrying all five. Disjunctive: one clique
// whose edges are split evenly among the five targets. Noise removes clique
// edges, adds edges between other vertex pairs and sprinkles extra labels,
// each with probability epsilon.

#ifndef LABELDENSE_SYNTHGEN_H_
#define LABELDENSE_SYNTHGEN_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "labeldense/graph.h"
#include "labeldense/rational.h"

namespace labeldense {

enum class SynthKind { kConjunctive, kDisjunctive };

std::string_view SynthKindName(SynthKind kind);
SynthKind ParseSynthKind(std::string_view text);
inline InduceMode ModeOf(SynthKind kind) {
  return kind == SynthKind::kConjunctive ? InduceMode::kConjunctive
                                         : InduceMode::kDisjunctive;
}

inline constexpr size_t kNumTargets = 5;

struct CliqueSizes {
  size_t small = 10;        // conjunctive: five of these
  size_t large = 20;        // conjunctive: the all-target clique
  size_t disjunctive = 40;  // disjunctive: the single clique
};

struct SynthInstance {
  LabeledGraph graph;
  SynthKind kind = SynthKind::kConjunctive;
  std::vector<LabelId> target_labels;  // planting order
  std::vector<std::vector<VertexId>> cliques;  // planted, before noise
  // Subgraph induced by the targets in the generated (noisy) graph.
  int64_t target_n = 0;
  int64_t target_m = 0;
  Rational target_density;
  uint64_t seed = 0;
  double epsilon = 0;
  size_t total_vertices = 0;
  size_t total_labels = 0;
};

// Vertices are named v0.., labels L0..; filler vertices stay isolated unless
// noise reaches them. Throws InputError on invalid sizes or epsilon.
SynthInstance GenConjunctive(double epsilon, uint64_t seed,
                             size_t total_vertices = 200,
                             size_t total_labels = 50,
                             const CliqueSizes& sizes = {});

SynthInstance GenDisjunctive(double epsilon, uint64_t seed,
                             size_t total_vertices = 200,
                             size_t total_labels = 50,
                             const CliqueSizes& sizes = {});

// Same construction for runtime studies, thinned so that sizes in the
// documented range fit in memory. Above 200 vertices round(eps*199*V/2)
// distinct noise pairs are sampled, keeping the 200-vertex noise degree.
// Above 50 labels every noisy label draw uses probability eps*50/min(L, 1000)
// instead of eps. Edge-label pairs therefore grow linearly in V and, from
// 1000 labels on, in L. At 200 vertices and 50 labels this is exactly
// GenConjunctive/GenDisjunctive.
SynthInstance GenScaling(SynthKind kind, double epsilon, uint64_t seed,
                         size_t total_vertices, size_t total_labels);

// The documented range for GenScaling; outside it the caller should warn.
bool ScalingSizesInRange(size_t total_vertices, size_t total_labels);

}  // namespace labeldense

#endif  // LABELDENSE_SYNTHGEN_H_

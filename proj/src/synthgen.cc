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
#include "labeldense/synthgen.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>

#include "labeldense/errors.h"

namespace labeldense {
namespace {

constexpr size_t kBaseVertices = 200;
constexpr size_t kBaseLabels = 50;
constexpr size_t kLabelDilutionCap = 1000;

// Each construction phase draws from its own stream so that changing one
// phase never shifts the numbers another phase sees.
enum class Phase : uint64_t {
  kVertexOrder = 1,
  kTargets,
  kPartition,
  kRemoval,
  kCliqueLabels,
  kNoiseEdges,
  kNoiseLabels,
};

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mt19937_64 output is fixed by the standard; the std distributions are not,
// so the conversions below are spelled out.
class Stream {
 public:
  Stream(uint64_t seed, Phase phase)
      : engine_(SplitMix64(seed ^ SplitMix64(static_cast<uint64_t>(phase)))) {}

  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  bool Bernoulli(double p) { return p >= 1.0 || Uniform() < p; }

  // Uniform in [0, bound).
  uint64_t Below(uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct Params {
  SynthKind kind;
  double epsilon;
  uint64_t seed;
  size_t vertices;
  size_t labels;
  CliqueSizes sizes;
  bool scaled_noise;
};

using Edge = LabeledGraph::RawEdge;

void Validate(const Params& p) {
  if (!(p.epsilon >= 0.0 && p.epsilon <= 1.0)) {
    throw InputError("epsilon must lie in [0, 1]");
  }
  if (p.labels < kNumTargets) {
    throw InputError("need at least " + std::to_string(kNumTargets) +
                     " labels");
  }
  const size_t planted = p.kind == SynthKind::kConjunctive
                             ? kNumTargets * p.sizes.small + p.sizes.large
                             : p.sizes.disjunctive;
  const size_t min_clique = p.kind == SynthKind::kConjunctive
                                ? std::min(p.sizes.small, p.sizes.large)
                                : p.sizes.disjunctive;
  if (min_clique < 2) throw InputError("cliques need at least 2 vertices");
  if (p.vertices < planted) {
    throw InputError("need at least " + std::to_string(planted) +
                     " vertices for the planted cliques");
  }
  if (p.vertices > (size_t{1} << 31)) throw InputError("too many vertices");
}

// Labels drawn independently with probability q, redrawn until non-empty.
std::vector<LabelId> RandomLabelSet(Stream& rng, size_t num_labels, double q) {
  std::vector<LabelId> out;
  while (out.empty()) {
    for (LabelId l = 0; l < num_labels; ++l) {
      if (rng.Bernoulli(q)) out.push_back(l);
    }
  }
  return out;
}

SynthInstance Generate(const Params& p) {
  Validate(p);
  const double eps = p.epsilon;

  Stream order_rng(p.seed, Phase::kVertexOrder);
  std::vector<VertexId> order(p.vertices);
  for (VertexId v = 0; v < p.vertices; ++v) order[v] = v;
  order_rng.Shuffle(order);

  Stream target_rng(p.seed, Phase::kTargets);
  std::vector<LabelId> shuffled(p.labels);
  for (LabelId l = 0; l < p.labels; ++l) shuffled[l] = l;
  target_rng.Shuffle(shuffled);
  const std::vector<LabelId> targets(shuffled.begin(),
                                     shuffled.begin() + kNumTargets);
  std::vector<char> is_target(p.labels, 0);
  for (const LabelId t : targets) is_target[t] = 1;

  // clique_of[v] = clique index, or -1 for filler.
  std::vector<int> clique_of(p.vertices, -1);
  std::vector<std::vector<VertexId>> cliques;
  size_t next = 0;
  auto take = [&](size_t size) {
    std::vector<VertexId> members(order.begin() + next,
                                  order.begin() + next + size);
    std::sort(members.begin(), members.end());
    for (const VertexId v : members) {
      clique_of[v] = static_cast<int>(cliques.size());
    }
    cliques.push_back(std::move(members));
    next += size;
  };
  if (p.kind == SynthKind::kConjunctive) {
    for (size_t k = 0; k < kNumTargets; ++k) take(p.sizes.small);
    take(p.sizes.large);
  } else {
    take(p.sizes.disjunctive);
  }

  std::vector<Edge> clique_edges;
  for (size_t c = 0; c < cliques.size(); ++c) {
    const auto& members = cliques[c];
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        Edge e{members[i], members[j], {}};
        if (p.kind == SynthKind::kConjunctive) {
          for (size_t k = 0; k < kNumTargets; ++k) {
            if (k != c) e.labels.push_back(targets[k]);
          }
        }
        clique_edges.push_back(std::move(e));
      }
    }
  }
  if (p.kind == SynthKind::kDisjunctive) {
    std::vector<size_t> idx(clique_edges.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    Stream part_rng(p.seed, Phase::kPartition);
    part_rng.Shuffle(idx);
    for (size_t i = 0; i < idx.size(); ++i) {
      clique_edges[idx[i]].labels.push_back(targets[i % kNumTargets]);
    }
  }

  // Scaled runs shrink the per-label noise probability as 50/L, frozen from
  // kLabelDilutionCap labels on, so label sets stay small while p still grows
  // linearly with L.
  double label_q = eps;
  if (p.scaled_noise && p.labels > kBaseLabels) {
    label_q = eps * static_cast<double>(kBaseLabels) /
              static_cast<double>(std::min(p.labels, kLabelDilutionCap));
  }

  Stream removal_rng(p.seed, Phase::kRemoval);
  Stream clique_label_rng(p.seed, Phase::kCliqueLabels);
  std::vector<Edge> edges;
  for (Edge& e : clique_edges) {
    if (eps > 0 && removal_rng.Bernoulli(eps)) continue;
    // Conjunctive cliques never gain the missing target label; the
    // disjunctive clique may gain any label.
    std::sort(e.labels.begin(), e.labels.end());
    const std::vector<LabelId> base = e.labels;
    for (LabelId l = 0; l < p.labels; ++l) {
      if (std::binary_search(base.begin(), base.end(), l)) continue;
      if (p.kind == SynthKind::kConjunctive && is_target[l]) continue;
      if (eps > 0 && clique_label_rng.Bernoulli(label_q)) e.labels.push_back(l);
    }
    edges.push_back(std::move(e));
  }

  Stream noise_rng(p.seed, Phase::kNoiseEdges);
  Stream noise_label_rng(p.seed, Phase::kNoiseLabels);
  auto same_clique = [&](VertexId u, VertexId v) {
    return clique_of[u] >= 0 && clique_of[u] == clique_of[v];
  };
  if (eps > 0) {
    if (p.scaled_noise && p.vertices > kBaseVertices) {
      // Keep the 200-vertex expected noise degree eps*199, so the noise
      // edge count grows linearly with the vertex count.
      const double pairs = static_cast<double>(kBaseVertices - 1) *
                           static_cast<double>(p.vertices) / 2.0;
      const auto count = static_cast<size_t>(std::llround(eps * pairs));
      std::unordered_set<uint64_t> used;
      while (used.size() < count) {
        auto u = static_cast<VertexId>(noise_rng.Below(p.vertices));
        auto v = static_cast<VertexId>(noise_rng.Below(p.vertices));
        if (u == v || same_clique(u, v)) continue;
        if (u > v) std::swap(u, v);
        if (!used.insert(uint64_t{u} << 32 | v).second) continue;
        edges.push_back({u, v, RandomLabelSet(noise_label_rng, p.labels,
                                              label_q)});
      }
    } else {
      for (VertexId u = 0; u < p.vertices; ++u) {
        for (VertexId v = u + 1; v < p.vertices; ++v) {
          if (same_clique(u, v) || !noise_rng.Bernoulli(eps)) continue;
          edges.push_back({u, v, RandomLabelSet(noise_label_rng, p.labels,
                                                label_q)});
        }
      }
    }
  }

  std::vector<std::string> vertex_names(p.vertices), label_names(p.labels);
  for (size_t v = 0; v < p.vertices; ++v) vertex_names[v] = "v" + std::to_string(v);
  for (size_t l = 0; l < p.labels; ++l) label_names[l] = "L" + std::to_string(l);

  SynthInstance out;
  out.graph = LabeledGraph::FromParts(std::move(vertex_names),
                                      std::move(label_names), std::move(edges));
  out.kind = p.kind;
  out.target_labels = targets;
  out.cliques = std::move(cliques);
  std::vector<LabelId> sorted_targets = targets;
  std::sort(sorted_targets.begin(), sorted_targets.end());
  const InducedSubgraph planted =
      Induce(out.graph, ModeOf(p.kind), sorted_targets);
  out.target_n = planted.n;
  out.target_m = planted.m;
  out.target_density = Density(planted);
  out.seed = p.seed;
  out.epsilon = eps;
  out.total_vertices = p.vertices;
  out.total_labels = p.labels;
  return out;
}

}  // namespace

std::string_view SynthKindName(SynthKind kind) {
  return kind == SynthKind::kConjunctive ? "conjunctive" : "disjunctive";
}

SynthKind ParseSynthKind(std::string_view text) {
  return ParseMode(text) == InduceMode::kConjunctive ? SynthKind::kConjunctive
                                                     : SynthKind::kDisjunctive;
}

SynthInstance GenConjunctive(double epsilon, uint64_t seed,
                             size_t total_vertices, size_t total_labels,
                             const CliqueSizes& sizes) {
  return Generate({SynthKind::kConjunctive, epsilon, seed, total_vertices,
                   total_labels, sizes, false});
}

SynthInstance GenDisjunctive(double epsilon, uint64_t seed,
                             size_t total_vertices, size_t total_labels,
                             const CliqueSizes& sizes) {
  return Generate({SynthKind::kDisjunctive, epsilon, seed, total_vertices,
                   total_labels, sizes, false});
}

SynthInstance GenScaling(SynthKind kind, double epsilon, uint64_t seed,
                         size_t total_vertices, size_t total_labels) {
  return Generate({kind, epsilon, seed, total_vertices, total_labels,
                   CliqueSizes{}, true});
}

bool ScalingSizesInRange(size_t total_vertices, size_t total_labels) {
  return total_vertices >= 10000 && total_vertices <= 100000 &&
         total_labels >= 1000 && total_labels <= 10000;
}

}  // namespace labeldense

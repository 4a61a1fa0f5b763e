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
#ifndef LABELDENSE_CHAIN_H_
#define LABELDENSE_CHAIN_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "labeldense/graph.h"

namespace labeldense {

// A planar point (m, n) tagged with the label that represents it.
struct ChainPoint {
  int64_t m = 0;
  int64_t n = 0;
  LabelId label = 0;
};

// Pool of implicit-key treaps used as concatenable queues of hull vertices.
//
// Each treap is identified by its root Ref. Split and Join run in expected
// O(log size). Every node caches its subtree size, the minimum label in the
// subtree and the refs of its leftmost and rightmost nodes, so in-order
// neighbours are available in O(1) during a root-to-leaf descent.
class ChainPool {
 public:
  using Ref = int32_t;
  static constexpr Ref kNil = -1;

  ChainPool() : rng_(0x9e3779b97f4a7c15ULL) {}

  Ref Make(const ChainPoint& p);
  // `node` must be a detached single-node treap.
  void Release(Ref node);

  Ref Join(Ref a, Ref b);
  // Returns (first k elements, rest).
  std::pair<Ref, Ref> Split(Ref t, size_t k);

  size_t size(Ref t) const { return t == kNil ? 0 : nodes_[t].size; }
  Ref left(Ref t) const { return nodes_[t].left; }
  Ref right(Ref t) const { return nodes_[t].right; }
  Ref first(Ref t) const { return nodes_[t].first; }
  Ref last(Ref t) const { return nodes_[t].last; }
  const ChainPoint& point(Ref t) const { return nodes_[t].point; }

  // Minimum label over in-order positions [lo, hi); requires lo < hi.
  LabelId RangeMinLabel(Ref t, size_t lo, size_t hi) const;
  void AppendTo(Ref t, std::vector<ChainPoint>& out) const;
  size_t live_nodes() const { return nodes_.size() - free_.size(); }

 private:
  struct Node {
    ChainPoint point;
    uint64_t priority = 0;
    Ref left = kNil;
    Ref right = kNil;
    Ref first = kNil;
    Ref last = kNil;
    uint32_t size = 1;
    LabelId min_label = 0;
  };

  void Pull(Ref t);

  std::vector<Node> nodes_;
  std::vector<Ref> free_;
  std::mt19937_64 rng_;
};

}  // namespace labeldense

#endif  // LABELDENSE_CHAIN_H_

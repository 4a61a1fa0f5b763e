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
#include "labeldense/chain.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace labeldense {

ChainPool::Ref ChainPool::Make(const ChainPoint& p) {
  Ref t;
  if (!free_.empty()) {
    t = free_.back();
    free_.pop_back();
  } else {
    if (nodes_.size() >= static_cast<size_t>(std::numeric_limits<Ref>::max())) {
      throw std::length_error("chain pool exhausted");
    }
    t = static_cast<Ref>(nodes_.size());
    nodes_.emplace_back();
  }
  Node& node = nodes_[t];
  node = Node{};
  node.point = p;
  node.priority = rng_();
  Pull(t);
  return t;
}

void ChainPool::Release(Ref node) {
  if (node == kNil) return;
  if (nodes_[node].size != 1) {
    throw std::logic_error("releasing a chain node that is still linked");
  }
  free_.push_back(node);
}

void ChainPool::Pull(Ref t) {
  Node& x = nodes_[t];
  x.size = 1;
  x.min_label = x.point.label;
  x.first = t;
  x.last = t;
  if (x.left != kNil) {
    const Node& l = nodes_[x.left];
    x.size += l.size;
    x.min_label = std::min(x.min_label, l.min_label);
    x.first = l.first;
  }
  if (x.right != kNil) {
    const Node& r = nodes_[x.right];
    x.size += r.size;
    x.min_label = std::min(x.min_label, r.min_label);
    x.last = r.last;
  }
}

ChainPool::Ref ChainPool::Join(Ref a, Ref b) {
  if (a == kNil) return b;
  if (b == kNil) return a;
  if (nodes_[a].priority > nodes_[b].priority) {
    nodes_[a].right = Join(nodes_[a].right, b);
    Pull(a);
    return a;
  }
  nodes_[b].left = Join(a, nodes_[b].left);
  Pull(b);
  return b;
}

std::pair<ChainPool::Ref, ChainPool::Ref> ChainPool::Split(Ref t, size_t k) {
  if (t == kNil) return {kNil, kNil};
  const size_t left_size = size(nodes_[t].left);
  if (k <= left_size) {
    auto [a, b] = Split(nodes_[t].left, k);
    nodes_[t].left = b;
    Pull(t);
    return {a, t};
  }
  auto [a, b] = Split(nodes_[t].right, k - left_size - 1);
  nodes_[t].right = a;
  Pull(t);
  return {t, b};
}

LabelId ChainPool::RangeMinLabel(Ref t, size_t lo, size_t hi) const {
  LabelId best = std::numeric_limits<LabelId>::max();
  while (t != kNil && lo < hi) {
    const Node& x = nodes_[t];
    if (lo == 0 && hi >= x.size) return std::min(best, x.min_label);
    const size_t ls = size(x.left);
    if (hi <= ls) {
      t = x.left;
    } else if (lo > ls) {
      t = x.right;
      lo -= ls + 1;
      hi -= ls + 1;
    } else {
      // The range straddles x: left part is a suffix of x.left, right part
      // a prefix of x.right.
      best = std::min(best, x.point.label);
      if (lo < ls) best = std::min(best, RangeMinLabel(x.left, lo, ls));
      if (hi > ls + 1) {
        best = std::min(best, RangeMinLabel(x.right, 0, hi - ls - 1));
      }
      return best;
    }
  }
  return best;
}

void ChainPool::AppendTo(Ref t, std::vector<ChainPoint>& out) const {
  if (t == kNil) return;
  AppendTo(nodes_[t].left, out);
  out.push_back(nodes_[t].point);
  AppendTo(nodes_[t].right, out);
}

}  // namespace labeldense

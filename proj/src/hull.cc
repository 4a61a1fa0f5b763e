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
#include "labeldense/hull.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace labeldense {
namespace {

using Ref = ChainPool::Ref;
constexpr Ref kNil = ChainPool::kNil;
using i128 = __int128;

// > 0 when c lies to the left of the directed line a -> b.
i128 Orient(const ChainPoint& a, const ChainPoint& b, const ChainPoint& c) {
  return static_cast<i128>(b.m - a.m) * (c.n - a.n) -
         static_cast<i128>(b.n - a.n) * (c.m - a.m);
}

// Points are ordered by m ascending, then n descending. This is the x-order
// after an infinitesimal shear (m, n) -> (m - eps*n, n), which has unit
// determinant and so leaves every orientation test unchanged; in the sheared
// plane no two points share an x-coordinate.
bool KeyLess(const ChainPoint& a, const ChainPoint& b) {
  return a.m < b.m || (a.m == b.m && a.n > b.n);
}

bool SameCoord(const ChainPoint& a, const ChainPoint& b) {
  return a.m == b.m && a.n == b.n;
}

// Whether the intersection of line(a, a2) with line(b1, b) lies at or to the
// left of `mark` in the sheared x-order.
bool IntersectionAtOrLeftOf(const ChainPoint& a, const ChainPoint& a2,
                            const ChainPoint& b1, const ChainPoint& b,
                            const ChainPoint& mark) {
  const i128 dam = a2.m - a.m, dan = a2.n - a.n;
  const i128 dbm = b.m - b1.m, dbn = b.n - b1.n;
  const i128 den = dam * dbn - dan * dbm;
  if (den <= 0) throw std::logic_error("hull bridge: lines do not converge");
  const i128 t = static_cast<i128>(b1.m - a.m) * dbn -
                 static_cast<i128>(b1.n - a.n) * dbm;
  const i128 x = a.m * den + t * dam;
  const i128 y = a.n * den + t * dan;
  const i128 mx = mark.m * den;
  const i128 my = mark.n * den;
  if (x != mx) return x < mx;
  return y >= my;
}

}  // namespace

// Height-balanced leaf tree over distinct coordinates. A node whose parent
// is assembled holds in `chain` only the part of its hull the parent does not
// use; the root holds its full hull. Down() hands a node's hull back to its
// children and Up() recomputes it from them.
class HullTree {
 public:
  bool empty() const { return root_ < 0; }
  Ref hull() const { return root_ < 0 ? kNil : nodes_[root_].chain; }
  const ChainPool& pool() const { return pool_; }

  void Insert(const ChainPoint& p) {
    root_ = root_ < 0 ? NewLeaf(p) : InsertRec(root_, p);
  }
  void Erase(const ChainPoint& p) {
    if (root_ < 0) throw std::logic_error("hull tree: erase from empty tree");
    root_ = EraseRec(root_, p);
  }

  // Descent state inside one treap: current node plus the nearest ancestors
  // on either side and the number of elements left of the subtree.
  struct Cursor {
    Ref node = kNil;
    Ref pred_anc = kNil;
    Ref succ_anc = kNil;
    size_t offset = 0;
  };

  Ref Prev(const Cursor& c) const {
    const Ref l = pool_.left(c.node);
    return l != kNil ? pool_.last(l) : c.pred_anc;
  }
  Ref Next(const Cursor& c) const {
    const Ref r = pool_.right(c.node);
    return r != kNil ? pool_.first(r) : c.succ_anc;
  }
  size_t Index(const Cursor& c) const {
    return c.offset + pool_.size(pool_.left(c.node));
  }
  void GoLeft(Cursor& c) const {
    c.succ_anc = c.node;
    c.node = pool_.left(c.node);
  }
  void GoRight(Cursor& c) const {
    c.offset += pool_.size(pool_.left(c.node)) + 1;
    c.pred_anc = c.node;
    c.node = pool_.right(c.node);
  }

  // Last index where a prefix-true predicate pred(index, node, prev, next)
  // holds; SIZE_MAX if it holds nowhere.
  template <typename Pred>
  size_t LastTrue(Ref root, Pred&& pred) const {
    size_t best = SIZE_MAX;
    Cursor c{root};
    while (c.node != kNil) {
      const size_t idx = Index(c);
      if (pred(idx, c.node, Prev(c), Next(c))) {
        best = idx;
        GoRight(c);
      } else {
        GoLeft(c);
      }
    }
    return best;
  }

  // First index where a suffix-true predicate holds; size if nowhere.
  template <typename Pred>
  size_t FirstTrue(Ref root, Pred&& pred) const {
    size_t best = pool_.size(root);
    Cursor c{root};
    while (c.node != kNil) {
      const size_t idx = Index(c);
      if (pred(idx, c.node, Prev(c), Next(c))) {
        best = idx;
        GoLeft(c);
      } else {
        GoRight(c);
      }
    }
    return best;
  }

  const ChainPoint& At(Ref root, size_t k) const {
    Ref t = root;
    while (t != kNil) {
      const size_t ls = pool_.size(pool_.left(t));
      if (k < ls) {
        t = pool_.left(t);
      } else if (k == ls) {
        return pool_.point(t);
      } else {
        k -= ls + 1;
        t = pool_.right(t);
      }
    }
    throw std::out_of_range("hull chain index");
  }

 private:
  struct Node {
    int left = -1;
    int right = -1;
    int height = 0;
    Ref chain = kNil;
    size_t bridge = 0;  // hull prefix contributed by the left child
    ChainPoint key;     // leaf: its point; internal: largest key below
  };

  bool IsLeaf(int v) const { return nodes_[v].left < 0; }
  int Height(int v) const { return nodes_[v].height; }

  int NewNode() {
    if (!free_.empty()) {
      const int v = free_.back();
      free_.pop_back();
      nodes_[v] = Node{};
      return v;
    }
    nodes_.emplace_back();
    return static_cast<int>(nodes_.size()) - 1;
  }
  void FreeNode(int v) { free_.push_back(v); }

  int NewLeaf(const ChainPoint& p) {
    const int v = NewNode();
    nodes_[v].key = p;
    nodes_[v].chain = pool_.Make(p);
    return v;
  }

  void Down(int v) {
    Node& x = nodes_[v];
    auto [lpart, rpart] = pool_.Split(x.chain, x.bridge);
    x.chain = kNil;
    nodes_[x.left].chain = pool_.Join(lpart, nodes_[x.left].chain);
    nodes_[x.right].chain = pool_.Join(nodes_[x.right].chain, rpart);
  }

  void Up(int v) {
    const int l = nodes_[v].left;
    const int r = nodes_[v].right;
    const auto [p, q] = Bridge(nodes_[l].chain, nodes_[r].chain);
    auto [keep_left, rest_left] = pool_.Split(nodes_[l].chain, p + 1);
    auto [rest_right, keep_right] = pool_.Split(nodes_[r].chain, q);
    nodes_[l].chain = rest_left;
    nodes_[r].chain = rest_right;
    Node& x = nodes_[v];
    x.chain = pool_.Join(keep_left, keep_right);
    x.bridge = p + 1;
    x.height = 1 + std::max(Height(l), Height(r));
    x.key = nodes_[r].key;
  }

  // Common lower tangent of two non-empty hulls A and B, every key of A
  // preceding every key of B. Returns (index in A, index in B) of the
  // rightmost A vertex and leftmost B vertex on the tangent line.
  //
  // Each round classifies a (resp. b) as T when line(a, b) supports A at a,
  // L when its predecessor is strictly below the line and R when its
  // successor is. a=L puts the tangent point left of a, b=R puts it right
  // of b; (T,L) moves b left, (R,T) moves a right, and (R,L) compares the
  // crossing of the two hull edges with the last point of A. Every round
  // descends one treap level, so the search costs O(log |A| + log |B|).
  std::pair<size_t, size_t> Bridge(Ref ha, Ref hb) const {
    enum class Side { kTangent, kLeft, kRight };
    const ChainPoint& last_a = pool_.point(pool_.last(ha));
    Cursor a{ha};
    Cursor b{hb};
    for (;;) {
      if (a.node == kNil || b.node == kNil) {
        throw std::logic_error("hull bridge search left its range");
      }
      const ChainPoint& pa = pool_.point(a.node);
      const ChainPoint& pb = pool_.point(b.node);
      const Ref am = Prev(a), ap = Next(a), bm = Prev(b), bp = Next(b);
      Side sa = Side::kTangent;
      if (am != kNil && Orient(pa, pb, pool_.point(am)) < 0) {
        sa = Side::kLeft;
      } else if (ap != kNil && Orient(pa, pb, pool_.point(ap)) < 0) {
        sa = Side::kRight;
      }
      Side sb = Side::kTangent;
      if (bm != kNil && Orient(pa, pb, pool_.point(bm)) < 0) {
        sb = Side::kLeft;
      } else if (bp != kNil && Orient(pa, pb, pool_.point(bp)) < 0) {
        sb = Side::kRight;
      }

      if (sa == Side::kLeft) {
        GoLeft(a);
      } else if (sb == Side::kRight) {
        GoRight(b);
      } else if (sa == Side::kTangent && sb == Side::kTangent) {
        break;
      } else if (sa == Side::kTangent) {
        GoLeft(b);
      } else if (sb == Side::kTangent) {
        GoRight(a);
      } else if (IntersectionAtOrLeftOf(pa, pool_.point(ap), pool_.point(bm),
                                        pb, last_a)) {
        GoRight(a);
      } else {
        GoLeft(b);
      }
    }

    const ChainPoint pa = pool_.point(a.node);
    const ChainPoint pb = pool_.point(b.node);
    const size_t ia = Index(a);
    const size_t ib = Index(b);
    const size_t p = LastTrue(ha, [&](size_t idx, Ref node, Ref, Ref) {
      return idx <= ia || Orient(pa, pb, pool_.point(node)) == 0;
    });
    const size_t q = FirstTrue(hb, [&](size_t idx, Ref node, Ref, Ref) {
      return idx >= ib || Orient(pa, pb, pool_.point(node)) == 0;
    });
    return {p, q};
  }

  int InsertRec(int v, const ChainPoint& p) {
    if (IsLeaf(v)) {
      if (SameCoord(nodes_[v].key, p)) {
        throw std::logic_error("hull tree: duplicate coordinate");
      }
      const int leaf = NewLeaf(p);
      const int u = NewNode();
      if (KeyLess(p, nodes_[v].key)) {
        nodes_[u].left = leaf;
        nodes_[u].right = v;
      } else {
        nodes_[u].left = v;
        nodes_[u].right = leaf;
      }
      Up(u);
      return u;
    }
    Down(v);
    const int l = nodes_[v].left;
    if (!KeyLess(nodes_[l].key, p)) {
      const int nl = InsertRec(l, p);
      nodes_[v].left = nl;
    } else {
      const int nr = InsertRec(nodes_[v].right, p);
      nodes_[v].right = nr;
    }
    return Rebalance(v);
  }

  int EraseRec(int v, const ChainPoint& p) {
    if (IsLeaf(v)) {
      if (!SameCoord(nodes_[v].key, p)) {
        throw std::logic_error("hull tree: coordinate not present");
      }
      pool_.Release(nodes_[v].chain);
      FreeNode(v);
      return -1;
    }
    Down(v);
    const int l = nodes_[v].left;
    const int r = nodes_[v].right;
    const bool go_left = !KeyLess(nodes_[l].key, p);
    const int child = EraseRec(go_left ? l : r, p);
    if (child < 0) {
      FreeNode(v);
      return go_left ? r : l;
    }
    (go_left ? nodes_[v].left : nodes_[v].right) = child;
    return Rebalance(v);
  }

  // v has been taken apart by Down(); both children hold full hulls.
  int Rebalance(int v) {
    const int l = nodes_[v].left;
    const int r = nodes_[v].right;
    if (Height(l) > Height(r) + 1) {
      if (Height(nodes_[l].left) >= Height(nodes_[l].right)) {
        Down(l);
        nodes_[v].left = nodes_[l].right;
        Up(v);
        nodes_[l].right = v;
        Up(l);
        return l;
      }
      const int lr = nodes_[l].right;
      Down(l);
      Down(lr);
      nodes_[l].right = nodes_[lr].left;
      Up(l);
      nodes_[v].left = nodes_[lr].right;
      Up(v);
      nodes_[lr].left = l;
      nodes_[lr].right = v;
      Up(lr);
      return lr;
    }
    if (Height(r) > Height(l) + 1) {
      if (Height(nodes_[r].right) >= Height(nodes_[r].left)) {
        Down(r);
        nodes_[v].right = nodes_[r].left;
        Up(v);
        nodes_[r].left = v;
        Up(r);
        return r;
      }
      const int rl = nodes_[r].left;
      Down(r);
      Down(rl);
      nodes_[r].left = nodes_[rl].right;
      Up(r);
      nodes_[v].right = nodes_[rl].left;
      Up(v);
      nodes_[rl].left = v;
      nodes_[rl].right = r;
      Up(rl);
      return rl;
    }
    Up(v);
    return v;
  }

  ChainPool pool_;
  std::vector<Node> nodes_;
  std::vector<int> free_;
  int root_ = -1;
};

SlopeBias ComputeSlopeBias(const HullPoint& p, const HullPoint& q) {
  if (p.n == q.n) {
    throw std::domain_error("inverse slope undefined for equal n");
  }
  const int64_t dn = q.n - p.n;
  return {Rational(q.m - p.m, dn),
          MakeRational(static_cast<i128>(q.m) * p.n -
                           static_cast<i128>(p.m) * q.n,
                       dn)};
}

DynamicHull::DynamicHull() : tree_(std::make_unique<HullTree>()) {}
DynamicHull::~DynamicHull() = default;
DynamicHull::DynamicHull(DynamicHull&&) noexcept = default;
DynamicHull& DynamicHull::operator=(DynamicHull&&) noexcept = default;

namespace {

void CheckCoordinates(int64_t m, int64_t n) {
  if (m < 0 || n < 0) {
    throw std::invalid_argument("hull coordinates must be nonnegative");
  }
  if (m > kMaxHullCoordinate || n > kMaxHullCoordinate) {
    throw std::overflow_error("hull coordinate exceeds 2^40 - 1");
  }
}

}  // namespace

void DynamicHull::Insert(const HullPoint& p) {
  CheckCoordinates(p.m, p.n);
  if (Contains(p.label)) {
    throw std::invalid_argument("label " + std::to_string(p.label) +
                                " already in hull");
  }
  AddToGroup(p.label, {p.m, p.n});
}

void DynamicHull::Update(LabelId label, int64_t m, int64_t n) {
  CheckCoordinates(m, n);
  auto it = where_.find(label);
  if (it == where_.end()) {
    throw std::invalid_argument("label " + std::to_string(label) +
                                " not in hull");
  }
  const Coord old = it->second;
  if (old == Coord{m, n}) return;
  RemoveFromGroup(label, old);
  AddToGroup(label, {m, n});
}

void DynamicHull::Erase(LabelId label) {
  auto it = where_.find(label);
  if (it == where_.end()) {
    throw std::invalid_argument("label " + std::to_string(label) +
                                " not in hull");
  }
  RemoveFromGroup(label, it->second);
}

std::optional<HullPoint> DynamicHull::Find(LabelId label) const {
  auto it = where_.find(label);
  if (it == where_.end()) return std::nullopt;
  return HullPoint{label, it->second.first, it->second.second};
}

void DynamicHull::AddToGroup(LabelId label, Coord c) {
  std::set<LabelId>& group = groups_[c];
  const ChainPoint point{c.first, c.second, label};
  if (group.empty()) {
    tree_->Insert(point);
  } else if (label < *group.begin()) {
    tree_->Erase(point);
    tree_->Insert(point);
  }
  group.insert(label);
  where_[label] = c;
}

void DynamicHull::RemoveFromGroup(LabelId label, Coord c) {
  auto it = groups_.find(c);
  std::set<LabelId>& group = it->second;
  const bool was_representative = *group.begin() == label;
  group.erase(label);
  where_.erase(label);
  if (group.empty()) {
    tree_->Erase({c.first, c.second, label});
    groups_.erase(it);
  } else if (was_representative) {
    tree_->Erase({c.first, c.second, label});
    tree_->Insert({c.first, c.second, *group.begin()});
  }
}

namespace {

// Index where the lower-right part of the full lower hull begins: the last
// vertex of minimum n.
size_t LowerRightStart(const HullTree& tree, Ref h) {
  const ChainPool& pool = tree.pool();
  return tree.FirstTrue(h, [&](size_t, Ref node, Ref, Ref next) {
    return next == kNil || pool.point(next).n > pool.point(node).n;
  });
}

}  // namespace

HullQuery DynamicHull::QueryBest(int64_t m, int64_t n) const {
  if (empty()) throw std::logic_error("query on empty hull");
  CheckCoordinates(m, n);
  const ChainPool& pool = tree_->pool();
  const Ref h = tree_->hull();
  const size_t start = LowerRightStart(*tree_, h);
  if (n == 0 && tree_->At(h, start).n == 0) {
    throw std::domain_error("query ratio has a zero denominator");
  }

  // (m + m_p) / (n + n_p) <= (m + m_q) / (n + n_q), i.e. m <= n*s(p,q) +
  // b(p,q) for consecutive hull vertices p, q.
  auto not_worse = [&](const ChainPoint& p, const ChainPoint& q) {
    return static_cast<i128>(m + p.m) * (n + q.n) <=
           static_cast<i128>(m + q.m) * (n + p.n);
  };
  const size_t best = tree_->LastTrue(h, [&](size_t idx, Ref node, Ref prev,
                                             Ref) {
    return idx <= start || not_worse(pool.point(prev), pool.point(node));
  });
  const ChainPoint top = tree_->At(h, best);
  // Maximisers form a contiguous run ending at `best`.
  const size_t first = tree_->FirstTrue(h, [&](size_t idx, Ref node, Ref,
                                               Ref) {
    if (idx > best) return true;
    if (idx < start) return false;
    return not_worse(top, pool.point(node));
  });
  HullQuery result;
  if (m == 0 && top.m == 0) {
    // Value zero: every point with m_i = 0 ties, including ones the chain
    // dropped. These groups form a prefix of the coordinate map.
    result.label = top.label;
    for (const auto& [c, group] : groups_) {
      if (c.first != 0) break;
      if (n + c.second > 0) result.label = std::min(result.label, *group.begin());
    }
    result.value = Rational(0);
    return result;
  }
  result.label = pool.RangeMinLabel(h, first, best + 1);
  result.value = MakeRational(static_cast<i128>(m) + top.m,
                              static_cast<i128>(n) + top.n);
  return result;
}

std::vector<HullPoint> DynamicHull::Vertices() const {
  std::vector<HullPoint> out;
  if (empty()) return out;
  const Ref h = tree_->hull();
  std::vector<ChainPoint> chain;
  tree_->pool().AppendTo(h, chain);
  const size_t start = LowerRightStart(*tree_, h);
  for (size_t i = start; i < chain.size(); ++i) {
    out.push_back({chain[i].label, chain[i].m, chain[i].n});
  }
  return out;
}

}  // namespace labeldense

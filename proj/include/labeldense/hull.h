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
#ifndef LABELDENSE_HULL_H_
#define LABELDENSE_HULL_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "labeldense/chain.h"
#include "labeldense/graph.h"
#include "labeldense/rational.h"

namespace labeldense {

// Gain point of one label: adding the label brings m edges and n vertices.
struct HullPoint {
  LabelId label = 0;
  int64_t m = 0;
  int64_t n = 0;

  friend bool operator==(const HullPoint&, const HullPoint&) = default;
};

// Inverse slope s(p,q) = (m_q - m_p) / (n_q - n_p) and bias
// b(p,q) = (m_q n_p - m_p n_q) / (n_q - n_p). For n >= 0 the test
// m <= n*s + b is equivalent to (m+m_p)/(n+n_p) <= (m+m_q)/(n+n_q).
struct SlopeBias {
  Rational slope;
  Rational bias;
};

// Throws std::domain_error when n_p == n_q.
SlopeBias ComputeSlopeBias(const HullPoint& p, const HullPoint& q);

struct HullQuery {
  LabelId label = 0;  // smallest label attaining the maximum
  Rational value;     // (m + m_i) / (n + n_i)
};

// Coordinates must lie in [0, kMaxHullCoordinate]; larger values are rejected
// with std::overflow_error so that every predicate fits in 128 bits.
inline constexpr int64_t kMaxHullCoordinate = (int64_t{1} << 40) - 1;

class HullTree;

// Lower-right convex hull of a dynamic set of labelled points (m_i, n_i).
//
// Points are kept in a height-balanced leaf tree ordered by m. Every internal
// node stores the part of its subtree's lower hull that its parent does not
// use, plus the bridge position, so the root holds the whole hull as a
// searchable treap. An update rebuilds the bridges along one root-to-leaf
// path: O(log^2 k) for k distinct points. Points sharing coordinates are
// grouped; the group's smallest label represents it on the hull. Collinear
// points stay on the hull so that QueryBest can report the smallest label
// among all maximisers.
class DynamicHull {
 public:
  DynamicHull();
  ~DynamicHull();
  DynamicHull(DynamicHull&&) noexcept;
  DynamicHull& operator=(DynamicHull&&) noexcept;

  // Throws std::invalid_argument if the label is already present.
  void Insert(const HullPoint& p);
  // Remove followed by insert. Throws std::invalid_argument if absent.
  void Update(LabelId label, int64_t m, int64_t n);
  void Erase(LabelId label);

  bool Contains(LabelId label) const { return where_.count(label) != 0; }
  std::optional<HullPoint> Find(LabelId label) const;
  size_t size() const { return where_.size(); }
  bool empty() const { return where_.empty(); }

  // Label maximising (m + m_i) / (n + n_i) over every stored point, found by
  // binary search over the hull. Ties go to the smallest label. Throws
  // std::logic_error when empty and std::domain_error when a denominator
  // would be zero.
  HullQuery QueryBest(int64_t m, int64_t n) const;

  // The hull in order of increasing m (and n), each vertex reported with its
  // group's smallest label.
  std::vector<HullPoint> Vertices() const;

 private:
  using Coord = std::pair<int64_t, int64_t>;

  void AddToGroup(LabelId label, Coord c);
  void RemoveFromGroup(LabelId label, Coord c);

  std::unique_ptr<HullTree> tree_;
  std::map<Coord, std::set<LabelId>> groups_;
  std::unordered_map<LabelId, Coord> where_;
};

}  // namespace labeldense

#endif  // LABELDENSE_HULL_H_

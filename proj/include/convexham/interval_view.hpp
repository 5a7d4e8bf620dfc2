// Copyright 2026 The convexham Authors
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

#ifndef CONVEXHAM_INTERVAL_VIEW_HPP
#define CONVEXHAM_INTERVAL_VIEW_HPP

#include <utility>
#include <vector>

#include "convexham/graph.hpp"
#include "convexham/sequence.hpp"

namespace convexham {

/// The interval graph I of a convex bipartite graph G: vertices X u Y, the
/// edges of G, plus an edge between two Y-vertices whose intervals meet.
///
/// I has exactly n maximal cliques C_1..C_n in consecutive order, where
/// C_i = {x_i} u {y : left(y) <= i <= right(y)}. Heights are clique indices
/// and the level of a vertex is the highest clique containing it, so
/// level(x_i) = i and level(y) = right(y). Nothing quadratic is stored: the
/// view answers every query from the intervals of G, which must outlive it.
class IntervalView {
 public:
  explicit IntervalView(const ConvexBipartiteGraph& g) : g_(&g) {}

  int clique_count() const noexcept { return g_->n(); }

  /// x_i followed by its Y-neighbours in input order.
  std::vector<Vertex> clique_members(int i) const {
    std::vector<Vertex> out{Vertex::x(i)};
    for (int j = 0; j < g_->y_count(); ++j) {
      if (g_->y(j).adjacent_to(i)) out.push_back(Vertex::y(j));
    }
    return out;
  }

  int level(const Vertex& v) const { return v.is_x() ? v.index : g_->y(v.index).right; }

  /// First and last clique containing v; every clique in between contains it.
  std::pair<int, int> clique_range(const Vertex& v) const {
    if (v.is_x()) return {v.index, v.index};
    return {g_->y(v.index).left, g_->y(v.index).right};
  }

  /// Y-vertices present in both C_i and C_{i+1}, in input order.
  std::vector<int> conductors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < g_->y_count(); ++j) {
      const auto& y = g_->y(j);
      if (y.left <= i && y.right >= i + 1) out.push_back(j);
    }
    return out;
  }

  /// Adjacency in I.
  bool adjacent(const Vertex& a, const Vertex& b) const {
    if (a == b) return false;
    if (a.is_x() && b.is_x()) return false;
    if (!a.is_x() && !b.is_x()) {
      const auto& ya = g_->y(a.index);
      const auto& yb = g_->y(b.index);
      return ya.left <= yb.right && yb.left <= ya.right;
    }
    return detail::adjacent(*g_, a, b);
  }

  const ConvexBipartiteGraph& graph() const noexcept { return *g_; }

 private:
  const ConvexBipartiteGraph* g_;
};

inline IntervalView build_view(const ConvexBipartiteGraph& g) { return IntervalView(g); }

}  // namespace convexham

#endif  // CONVEXHAM_INTERVAL_VIEW_HPP

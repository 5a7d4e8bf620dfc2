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

#ifndef CONVEXHAM_DETAIL_ACTIVE_POOL_HPP
#define CONVEXHAM_DETAIL_ACTIVE_POOL_HPP

#include <cstddef>
#include <vector>

#include "convexham/graph.hpp"

namespace convexham::detail {

// Candidate pool for left-to-right sweeps over X. A Y-vertex is admitted when
// the sweep reaches its left end and is dropped once taken or once its right
// end falls below the requested floor. A Y-vertex is scanned at most once per
// x it is adjacent to, so a full sweep costs O(n + |E|).
class ActivePool {
 public:
  explicit ActivePool(const ConvexBipartiteGraph& g) : g_(&g), taken_(static_cast<std::size_t>(g.y_count()), 0) {
    // Counting sort by left end keeps input order inside each bucket.
    const auto n = static_cast<std::size_t>(g.n());
    start_.assign(n + 2, 0);
    for (const auto& y : g.ys()) ++start_[static_cast<std::size_t>(y.left) + 1];
    for (std::size_t i = 1; i < start_.size(); ++i) start_[i] += start_[i - 1];
    by_left_.resize(static_cast<std::size_t>(g.y_count()));
    std::vector<int> fill(start_.begin(), start_.end());
    for (int j = 0; j < g.y_count(); ++j) {
      by_left_[static_cast<std::size_t>(fill[static_cast<std::size_t>(g.y(j).left)]++)] = j;
    }
  }

  // Admits every Y-vertex with left end i.
  void admit(int i) {
    const auto k = static_cast<std::size_t>(i);
    for (int s = start_[k]; s < start_[k + 1]; ++s) {
      const int j = by_left_[static_cast<std::size_t>(s)];
      if (!taken_[static_cast<std::size_t>(j)]) active_.push_back(j);
    }
  }

  // Untaken admitted Y-vertex with right >= floor minimising
  // (right, left, input index), or -1.
  int best(int floor) {
    int pick = -1;
    std::size_t keep = 0;
    for (std::size_t k = 0; k < active_.size(); ++k) {
      const int j = active_[k];
      if (taken_[static_cast<std::size_t>(j)] || g_->y(j).right < floor) continue;
      active_[keep++] = j;
      if (pick < 0 || before(j, pick)) pick = j;
    }
    active_.resize(keep);
    return pick;
  }

  void take(int j) { taken_[static_cast<std::size_t>(j)] = 1; }
  bool taken(int j) const { return taken_[static_cast<std::size_t>(j)] != 0; }

 private:
  bool before(int a, int b) const {
    const auto& ya = g_->y(a);
    const auto& yb = g_->y(b);
    if (ya.right != yb.right) return ya.right < yb.right;
    if (ya.left != yb.left) return ya.left < yb.left;
    return a < b;
  }

  const ConvexBipartiteGraph* g_;
  std::vector<char> taken_;
  std::vector<int> start_;
  std::vector<int> by_left_;
  std::vector<int> active_;
};

}  // namespace convexham::detail

#endif  // CONVEXHAM_DETAIL_ACTIVE_POOL_HPP

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

#ifndef CONVEXHAM_DETAIL_GAP_MATCHING_HPP
#define CONVEXHAM_DETAIL_GAP_MATCHING_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "convexham/graph.hpp"

namespace convexham::detail {

// The lower bound over chains of windows X_{p_1..q_1}, ..., X_{p_j..q_j}
// (q_i <= p_{i+1}) is a Hall condition. Gap g joins x_g and x_{g+1}; a window
// [p, q] owns gaps p..q-1 and a Y-vertex has two neighbours in it iff it
// spans one of those gaps. A chain therefore names an arbitrary nonempty gap
// set S with sum(q_i - p_i) = |S|, and the union of N' over the chain is the
// set of Y-vertices spanning a gap of S. The bound holds for every chain iff
// every gap can be matched to a distinct Y-vertex spanning it.

struct GapDeficiency {
  // Maximal runs of deficient gaps, as windows [p, q] (gaps p..q-1).
  std::vector<std::pair<int, int>> windows;
  int gap_count = 0;        // sum of q - p
  int spanning_count = 0;   // Y-vertices spanning at least one listed gap
};

// Earliest-deadline greedy: sweep gaps left to right and give each the
// available spanning Y-vertex with the smallest right end. On the first
// unmatched gap, the gaps reachable by alternating paths form a Hall
// violator. O((n + |Y|) log |Y|) overall.
inline std::optional<GapDeficiency> find_gap_deficiency(const ConvexBipartiteGraph& g) {
  const int n = g.n();
  if (n < 2) return std::nullopt;
  const auto nu = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> starting(nu + 1);
  for (int j = 0; j < g.y_count(); ++j) {
    const auto& y = g.y(j);
    if (y.right > y.left) starting[static_cast<std::size_t>(y.left)].push_back(j);
  }
  std::vector<int> gap_mate(nu, -1);  // gap -> y
  std::vector<int> y_mate(static_cast<std::size_t>(g.y_count()), -1);

  using Entry = std::pair<int, int>;  // (last gap spanned, y)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  int failed = -1;
  for (int gap = 1; gap < n; ++gap) {
    for (int j : starting[static_cast<std::size_t>(gap)]) heap.emplace(g.y(j).right - 1, j);
    while (!heap.empty() && heap.top().first < gap) heap.pop();
    if (heap.empty()) {
      failed = gap;
      break;
    }
    const int j = heap.top().second;
    heap.pop();
    gap_mate[static_cast<std::size_t>(gap)] = j;
    y_mate[static_cast<std::size_t>(j)] = gap;
  }
  if (failed < 0) return std::nullopt;

  // Alternating BFS from the failed gap. Spanning Y-vertices of a gap t are
  // pulled from a prefix-max tree over Y sorted by left end, so each Y-vertex
  // is visited once.
  std::vector<int> order(static_cast<std::size_t>(g.y_count()));
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.y(a).left < g.y(b).left; });
  std::size_t size = 1;
  while (size < order.size()) size <<= 1;
  std::vector<std::pair<int, int>> tree(2 * size, {-1, -1});  // (right, slot)
  for (std::size_t k = 0; k < order.size(); ++k) tree[size + k] = {g.y(order[k]).right, static_cast<int>(k)};
  for (std::size_t k = size - 1; k >= 1; --k) tree[k] = std::max(tree[2 * k], tree[2 * k + 1]);
  auto prefix_max = [&](std::size_t count) {
    std::pair<int, int> best{-1, -1};
    for (std::size_t lo = size, hi = size + count; lo < hi; lo >>= 1, hi >>= 1) {
      if (lo & 1) best = std::max(best, tree[lo++]);
      if (hi & 1) best = std::max(best, tree[--hi]);
    }
    return best;
  };
  auto retire = [&](std::size_t slot) {
    std::size_t k = size + slot;
    tree[k] = {-1, -1};
    for (k >>= 1; k >= 1; k >>= 1) tree[k] = std::max(tree[2 * k], tree[2 * k + 1]);
  };

  std::vector<char> gap_seen(nu, 0);
  std::vector<char> y_seen(static_cast<std::size_t>(g.y_count()), 0);
  std::vector<int> queue{failed};
  gap_seen[static_cast<std::size_t>(failed)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int gap = queue[head];
    const auto count = static_cast<std::size_t>(
        std::upper_bound(order.begin(), order.end(), gap,
                         [&](int t, int j) { return t < g.y(j).left; }) -
        order.begin());
    for (;;) {
      const auto [right, slot] = prefix_max(count);
      if (right <= gap) break;
      retire(static_cast<std::size_t>(slot));
      const int j = order[static_cast<std::size_t>(slot)];
      y_seen[static_cast<std::size_t>(j)] = 1;
      const int mate = y_mate[static_cast<std::size_t>(j)];
      if (mate > 0 && !gap_seen[static_cast<std::size_t>(mate)]) {
        gap_seen[static_cast<std::size_t>(mate)] = 1;
        queue.push_back(mate);
      }
    }
  }

  GapDeficiency out;
  for (int gap = 1; gap < n; ++gap) {
    if (!gap_seen[static_cast<std::size_t>(gap)]) continue;
    ++out.gap_count;
    if (!out.windows.empty() && out.windows.back().second == gap) {
      out.windows.back().second = gap + 1;
    } else {
      out.windows.emplace_back(gap, gap + 1);
    }
  }
  for (char s : y_seen) out.spanning_count += s ? 1 : 0;
  return out;
}

}  // namespace convexham::detail

#endif  // CONVEXHAM_DETAIL_GAP_MATCHING_HPP

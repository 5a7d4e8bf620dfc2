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

#ifndef CONVEXHAM_DETAIL_WINDOW_SCAN_HPP
#define CONVEXHAM_DETAIL_WINDOW_SCAN_HPP

#include <algorithm>
#include <climits>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "convexham/graph.hpp"

namespace convexham::detail {

// Range add / range max (leftmost argmax) over positions 1..n.
class MaxAddTree {
 public:
  explicit MaxAddTree(int n) : n_(n) {
    std::size_t size = 1;
    while (size < static_cast<std::size_t>(n)) size <<= 1;
    size_ = size;
    max_.assign(2 * size_, INT_MIN / 2);
    arg_.assign(2 * size_, 0);
    lazy_.assign(2 * size_, 0);
  }

  // Sets position i (1-based) to v; only valid before any add().
  void init(int i, int v) {
    const std::size_t leaf = size_ + static_cast<std::size_t>(i - 1);
    max_[leaf] = v;
    arg_[leaf] = i;
  }

  void build() {
    for (std::size_t k = size_ - 1; k >= 1; --k) pull(k);
  }

  void add(int lo, int hi, int delta) {
    if (lo > hi) return;
    add(1, 1, static_cast<int>(size_), lo, hi, delta);
  }

  // {max, leftmost position attaining it} over [lo, hi]; lo <= hi.
  std::pair<int, int> query(int lo, int hi) const { return query(1, 1, static_cast<int>(size_), lo, hi); }

 private:
  void pull(std::size_t k) {
    const std::size_t l = 2 * k, r = 2 * k + 1;
    if (max_[l] >= max_[r]) {
      max_[k] = max_[l] + lazy_[k];
      arg_[k] = arg_[l];
    } else {
      max_[k] = max_[r] + lazy_[k];
      arg_[k] = arg_[r];
    }
  }

  void add(std::size_t k, int nl, int nr, int lo, int hi, int delta) {
    if (hi < nl || nr < lo) return;
    if (lo <= nl && nr <= hi) {
      max_[k] += delta;
      lazy_[k] += delta;
      return;
    }
    const int mid = nl + (nr - nl) / 2;
    add(2 * k, nl, mid, lo, hi, delta);
    add(2 * k + 1, mid + 1, nr, lo, hi, delta);
    pull(k);
  }

  std::pair<int, int> query(std::size_t k, int nl, int nr, int lo, int hi) const {
    if (lo <= nl && nr <= hi) return {max_[k], arg_[k]};
    const int mid = nl + (nr - nl) / 2;
    std::pair<int, int> best{INT_MIN, 0};
    if (lo <= mid) best = query(2 * k, nl, mid, lo, hi);
    if (hi > mid) {
      auto right = query(2 * k + 1, mid + 1, nr, lo, hi);
      if (right.first > best.first) best = right;
    }
    best.first += lazy_[k];
    return best;
  }

  int n_;
  std::size_t size_ = 1;
  std::vector<int> max_;
  std::vector<int> arg_;
  std::vector<int> lazy_;
};

struct WindowExcess {
  int excess;  // closed_count(p, q) - (q - p)
  int p;
  int q;
};

// Maximises closed_count(p, q) - (q - p) over windows p < q with
// p_min <= p and q <= q_max, optionally excluding the full span (1, n).
// Runs in O((n + |Y|) log n). Ties resolve to the smallest q, then smallest p.
inline std::optional<WindowExcess> max_window_excess(const ConvexBipartiteGraph& g, int p_min,
                                                     int q_max, bool exclude_full_span) {
  const int n = g.n();
  if (n < 2) return std::nullopt;
  std::vector<std::vector<int>> by_right(static_cast<std::size_t>(n) + 1);
  for (const auto& y : g.ys()) by_right[static_cast<std::size_t>(y.right)].push_back(y.left);

  // Position p holds closed_count(p, q) + p for the current q.
  MaxAddTree tree(n);
  for (int p = 1; p <= n; ++p) tree.init(p, p);
  tree.build();

  std::optional<WindowExcess> best;
  for (int q = 1; q <= std::min(q_max, n); ++q) {
    for (int left : by_right[static_cast<std::size_t>(q)]) tree.add(1, left, 1);
    int lo = std::max(p_min, 1);
    const int hi = q - 1;
    if (exclude_full_span && q == n && lo == 1) lo = 2;
    if (lo > hi) continue;
    const auto [value, p] = tree.query(lo, hi);
    const int excess = value - q;
    if (!best || excess > best->excess) best = WindowExcess{excess, p, q};
  }
  return best;
}

}  // namespace convexham::detail

#endif  // CONVEXHAM_DETAIL_WINDOW_SCAN_HPP

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

#ifndef CONVEXHAM_GRAPH_HPP
#define CONVEXHAM_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace convexham {

enum class GraphErrorKind {
  InvalidSize,
  IntervalOutOfRange,
  DuplicateLabel,
  InvalidLabel,
  IndexOutOfRange,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// A Y-vertex of a convex bipartite graph. Its neighbourhood is the run
/// x_left, ..., x_right of X (1-based, inclusive).
struct YVertex {
  std::string label;
  int left = 1;
  int right = 1;

  int degree() const noexcept { return right - left + 1; }
  bool is_pendant() const noexcept { return left == right; }
  bool adjacent_to(int x) const noexcept { return left <= x && x <= right; }

  friend bool operator==(const YVertex&, const YVertex&) = default;
};

/// Input record for build_graph().
struct IntervalSpec {
  std::string label;
  int left;
  int right;
};

namespace detail {

inline bool is_all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline bool has_space_or_hash(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#' || c == ',' || c == '(' ||
           c == ')';
  });
}

}  // namespace detail

/// Convex bipartite graph with convexity on X = (x_1, ..., x_n).
///
/// Y-vertices are stored as index intervals over X, so convexity holds by
/// construction. Input order of Y is preserved; it is the final tie-break of
/// every deterministic choice made by the algorithms. The graph may be
/// disconnected. Instances are immutable once built.
class ConvexBipartiteGraph {
 public:
  ConvexBipartiteGraph() = default;

  int n() const noexcept { return n_; }
  int y_count() const noexcept { return static_cast<int>(ys_.size()); }
  int vertex_count() const noexcept { return n_ + y_count(); }
  const std::vector<YVertex>& ys() const noexcept { return ys_; }
  const YVertex& y(int j) const { return ys_.at(static_cast<std::size_t>(j)); }

  /// Index of the Y-vertex with this label, or -1.
  int find_label(std::string_view label) const {
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      if (ys_[j].label == label) return static_cast<int>(j);
    }
    return -1;
  }

  /// Sum of Y-degrees, i.e. the number of edges.
  std::int64_t edge_count() const noexcept {
    std::int64_t e = 0;
    for (const auto& y : ys_) e += y.degree();
    return e;
  }

  friend bool operator==(const ConvexBipartiteGraph&, const ConvexBipartiteGraph&) = default;

  friend ConvexBipartiteGraph build_graph(int n, std::vector<IntervalSpec> intervals);

 private:
  int n_ = 0;
  std::vector<YVertex> ys_;
};

/// Builds and validates a graph. Labels must be non-empty, unique, free of
/// whitespace and separator characters, and not purely numeric (so that
/// printed sequences stay unambiguous).
inline ConvexBipartiteGraph build_graph(int n, std::vector<IntervalSpec> intervals) {
  if (n < 1) {
    throw GraphError(GraphErrorKind::InvalidSize, "n must be at least 1, got " + std::to_string(n));
  }
  ConvexBipartiteGraph g;
  g.n_ = n;
  g.ys_.reserve(intervals.size());
  std::unordered_set<std::string> seen;
  seen.reserve(intervals.size() * 2);
  for (auto& spec : intervals) {
    if (spec.label.empty() || detail::has_space_or_hash(spec.label) ||
        detail::is_all_digits(spec.label)) {
      throw GraphError(GraphErrorKind::InvalidLabel, "invalid label '" + spec.label + "'");
    }
    if (spec.left < 1 || spec.right > n || spec.left > spec.right) {
      throw GraphError(GraphErrorKind::IntervalOutOfRange,
                       "interval of '" + spec.label + "' is [" + std::to_string(spec.left) + "," +
                           std::to_string(spec.right) + "], outside [1," + std::to_string(n) + "]");
    }
    if (!seen.insert(spec.label).second) {
      throw GraphError(GraphErrorKind::DuplicateLabel, "duplicate label '" + spec.label + "'");
    }
    g.ys_.push_back(YVertex{std::move(spec.label), spec.left, spec.right});
  }
  return g;
}

namespace detail {

inline void check_window(const ConvexBipartiteGraph& g, int p, int q) {
  if (p < 1 || q > g.n() || p > q) {
    throw GraphError(GraphErrorKind::IndexOutOfRange,
                     "window [" + std::to_string(p) + "," + std::to_string(q) +
                         "] is not inside [1," + std::to_string(g.n()) + "]");
  }
}

}  // namespace detail

/// |N_G[X_{p..q}]|: Y-vertices whose whole neighbourhood lies in x_p..x_q.
inline int closed_count(const ConvexBipartiteGraph& g, int p, int q) {
  detail::check_window(g, p, q);
  int c = 0;
  for (const auto& y : g.ys()) c += (p <= y.left && y.right <= q) ? 1 : 0;
  return c;
}

/// True iff y has at least two neighbours in x_p..x_q.
inline bool strongly_meets(const YVertex& y, int p, int q) noexcept {
  return std::min(y.right, q) - std::max(y.left, p) + 1 >= 2;
}

/// |N'_G[X_{p..q}]|: Y-vertices with at least two neighbours in x_p..x_q.
inline int strong_count(const ConvexBipartiteGraph& g, int p, int q) {
  detail::check_window(g, p, q);
  int c = 0;
  for (const auto& y : g.ys()) c += strongly_meets(y, p, q) ? 1 : 0;
  return c;
}

/// Indices (into ys()) of degree-one Y-vertices, in input order.
inline std::vector<int> pendant_ys(const ConvexBipartiteGraph& g) {
  std::vector<int> out;
  for (int j = 0; j < g.y_count(); ++j) {
    if (g.y(j).is_pendant()) out.push_back(j);
  }
  return out;
}

/// Connectivity of the undirected bipartite graph in O(n + |Y|).
///
/// Every Y-vertex touches X, so the graph is connected iff every gap
/// (x_i, x_{i+1}) is spanned by some Y-vertex.
inline bool is_connected(const ConvexBipartiteGraph& g) {
  const int n = g.n();
  // reach[i] = furthest right endpoint among intervals starting at i.
  std::vector<int> reach(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& y : g.ys()) {
    reach[static_cast<std::size_t>(y.left)] = std::max(reach[static_cast<std::size_t>(y.left)], y.right);
  }
  int covered = 1;
  for (int i = 1; i < n; ++i) {
    covered = std::max(covered, reach[static_cast<std::size_t>(i)]);
    if (covered <= i) return false;
  }
  return true;
}

/// O(1) closed_count queries after O(n^2 + |Y|) preprocessing.
///
/// table(p, q) counts intervals with left >= p and right <= q; it is a 2-D
/// suffix/prefix sum over the (left, right) histogram.
class DominanceTable {
 public:
  explicit DominanceTable(const ConvexBipartiteGraph& g) : n_(g.n()) {
    const auto w = static_cast<std::size_t>(n_) + 2;
    cells_.assign(w * w, 0);
    for (const auto& y : g.ys()) ++at(y.left, y.right);
    for (int p = n_; p >= 1; --p) {
      for (int q = 1; q <= n_; ++q) {
        at(p, q) += at(p + 1, q) + at(p, q - 1) - at(p + 1, q - 1);
      }
    }
  }

  int closed_count(int p, int q) const { return cells_[index(p, q)]; }
  int n() const noexcept { return n_; }

 private:
  std::size_t index(int p, int q) const {
    return static_cast<std::size_t>(p) * (static_cast<std::size_t>(n_) + 2) +
           static_cast<std::size_t>(q);
  }
  int& at(int p, int q) { return cells_[index(p, q)]; }

  int n_;
  std::vector<int> cells_;
};

}  // namespace convexham

#endif  // CONVEXHAM_GRAPH_HPP

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

#ifndef CONVEXHAM_ORACLE_HPP
#define CONVEXHAM_ORACLE_HPP

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "convexham/graph.hpp"
#include "convexham/properties.hpp"
#include "convexham/sequence.hpp"

namespace convexham {

// Exponential ground truth. Nothing here uses the structure theory of
// convex bipartite graphs: the graph is expanded to explicit adjacency and
// searched.

struct OracleLimits {
  int max_vertices = 22;         // backtracking searches
  int max_subset_vertices = 18;  // toughness enumeration
};

namespace detail {

using Mask = std::uint64_t;

// Vertex ids: x_i -> i - 1, y_j -> n + j.
struct ExplicitGraph {
  int n = 0;
  int size = 0;
  std::vector<Mask> adj;
  Mask x_mask = 0;

  explicit ExplicitGraph(const ConvexBipartiteGraph& g) : n(g.n()), size(g.vertex_count()), adj(static_cast<std::size_t>(size), 0) {
    for (int j = 0; j < g.y_count(); ++j) {
      for (int i = g.y(j).left; i <= g.y(j).right; ++i) {
        adj[static_cast<std::size_t>(i - 1)] |= Mask{1} << (n + j);
        adj[static_cast<std::size_t>(n + j)] |= Mask{1} << (i - 1);
      }
    }
    for (int i = 0; i < n; ++i) x_mask |= Mask{1} << i;
  }

  Mask all() const { return size == 64 ? ~Mask{0} : (Mask{1} << size) - 1; }
  Vertex vertex(int id) const { return id < n ? Vertex::x(id + 1) : Vertex::y(id - n); }

  // Connected components of the subgraph induced on `alive`.
  int components(Mask alive) const {
    int c = 0;
    while (alive) {
      Mask frontier = alive & (~alive + 1);
      Mask comp = frontier;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= alive & ~comp;
        comp |= next;
        frontier = next;
      }
      alive &= ~comp;
      ++c;
    }
    return c;
  }
};

inline void require_vertices(const ConvexBipartiteGraph& g, int cap, const char* what) {
  if (g.vertex_count() > cap || g.vertex_count() > 64) {
    throw CapExceeded(std::string(what) + " needs n + |Y| <= " + std::to_string(cap) + ", got " +
                      std::to_string(g.vertex_count()));
  }
}

class HamSearch {
 public:
  HamSearch(const ExplicitGraph& eg, bool cycle) : eg_(eg), cycle_(cycle) {}

  std::optional<std::vector<int>> run_from(int start) {
    path_.assign(1, start);
    visited_ = Mask{1} << start;
    start_ = start;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  bool extend() {
    const int cur = path_.back();
    if (visited_ == eg_.all()) {
      return !cycle_ || (eg_.adj[static_cast<std::size_t>(cur)] >> start_ & 1);
    }
    if (!feasible(cur)) return false;
    for (Mask cand = eg_.adj[static_cast<std::size_t>(cur)] & ~visited_; cand; cand &= cand - 1) {
      const int next = std::countr_zero(cand);
      path_.push_back(next);
      visited_ |= Mask{1} << next;
      if (extend()) return true;
      visited_ &= ~(Mask{1} << next);
      path_.pop_back();
    }
    return false;
  }

  // Degree pruning: each unvisited vertex still needs enough usable
  // neighbours, and the remaining sides must be able to alternate.
  bool feasible(int cur) const {
    const Mask rest = eg_.all() & ~visited_;
    const int rx = std::popcount(rest & eg_.x_mask);
    const int ry = std::popcount(rest & ~eg_.x_mask);
    const bool cur_x = cur < eg_.n;
    const int opposite = cur_x ? ry : rx;
    const int same = cur_x ? rx : ry;
    // The remainder starts on the opposite side and alternates. Cycles are
    // balanced up front, which keeps this automatically true for them.
    if (!cycle_ && opposite != same && opposite != same + 1) return false;
    Mask open = rest | (Mask{1} << cur);
    if (cycle_) open |= Mask{1} << start_;
    const int need = cycle_ ? 2 : 1;
    for (Mask r = rest; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (std::popcount(eg_.adj[static_cast<std::size_t>(v)] & open) < need) return false;
    }
    return true;
  }

  const ExplicitGraph& eg_;
  bool cycle_;
  int start_ = 0;
  Mask visited_ = 0;
  std::vector<int> path_;
};

inline HamSequence to_sequence(const ExplicitGraph& eg, const std::vector<int>& ids, SequenceKind kind) {
  HamSequence s;
  s.kind = kind;
  for (int id : ids) s.vertices.push_back(eg.vertex(id));
  return s;
}

}  // namespace detail

/// Exhaustive Hamiltonian cycle search starting at x_1.
inline std::optional<HamSequence> brute_ham_cycle(const ConvexBipartiteGraph& g, const OracleLimits& limits = {}) {
  detail::require_vertices(g, limits.max_vertices, "brute_ham_cycle");
  if (g.vertex_count() < 4) return std::nullopt;
  const detail::ExplicitGraph eg(g);
  // A cycle alternates sides, so it needs |X| = |Y|.
  if (g.y_count() != g.n()) return std::nullopt;
  detail::HamSearch search(eg, true);
  if (auto ids = search.run_from(0)) return detail::to_sequence(eg, *ids, SequenceKind::Cycle);
  return std::nullopt;
}

/// Exhaustive Hamiltonian path search, trying start vertices in id order
/// (x_1..x_n, then Y in input order).
inline std::optional<HamSequence> brute_ham_path(const ConvexBipartiteGraph& g, const OracleLimits& limits = {}) {
  detail::require_vertices(g, limits.max_vertices, "brute_ham_path");
  const detail::ExplicitGraph eg(g);
  if (std::abs(g.n() - g.y_count()) > 1) return std::nullopt;
  detail::HamSearch search(eg, false);
  for (int s = 0; s < eg.size; ++s) {
    if (auto ids = search.run_from(s)) return detail::to_sequence(eg, *ids, SequenceKind::Path);
  }
  return std::nullopt;
}

struct ChvatalResult {
  bool holds = true;
  std::vector<Vertex> cut;  // first violating S, or the worst S seen
  int components = 0;       // c(G - cut)
};

/// Checks c(G - S) <= |S| for every nonempty S, in order of increasing |S|.
///
/// Sizes |S| >= |V|/2 cannot violate the bound (G - S has at most
/// |V| - |S| vertices) and are skipped; the worst cut reported is the one of
/// maximum ratio c(G - S) / |S| among the enumerated sizes.
inline ChvatalResult chvatal_holds(const ConvexBipartiteGraph& g, const OracleLimits& limits = {}) {
  detail::require_vertices(g, limits.max_subset_vertices, "chvatal_holds");
  const detail::ExplicitGraph eg(g);
  const int v = eg.size;
  const detail::Mask all = eg.all();
  ChvatalResult result;
  detail::Mask worst = 0;
  int worst_c = 0, worst_k = 1;
  for (int k = 1; k <= v / 2; ++k) {
    // Gosper's hack over k-subsets.
    detail::Mask s = (detail::Mask{1} << k) - 1;
    while (s <= all) {
      const int c = eg.components(all & ~s);
      if (c > k) {
        result.holds = false;
        for (detail::Mask b = s; b; b &= b - 1) result.cut.push_back(eg.vertex(std::countr_zero(b)));
        result.components = c;
        return result;
      }
      if (worst == 0 || c * worst_k > worst_c * k) {
        worst = s;
        worst_c = c;
        worst_k = k;
      }
      const detail::Mask low = s & (~s + 1);
      const detail::Mask ripple = s + low;
      if (ripple == 0) break;
      s = (((ripple ^ s) >> 2) / low) | ripple;
    }
  }
  for (detail::Mask b = worst; b; b &= b - 1) result.cut.push_back(eg.vertex(std::countr_zero(b)));
  result.components = worst_c;
  return result;
}

/// Connected, at least three vertices, and no cut vertex. Plain BFS per
/// removed vertex; no size cap.
inline bool is_two_connected(const ConvexBipartiteGraph& g) {
  const int n = g.n();
  const int total = g.vertex_count();
  if (total < 3) return false;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
  for (int j = 0; j < g.y_count(); ++j) {
    for (int i = g.y(j).left; i <= g.y(j).right; ++i) {
      adj[static_cast<std::size_t>(i - 1)].push_back(n + j);
      adj[static_cast<std::size_t>(n + j)].push_back(i - 1);
    }
  }
  auto connected_without = [&](int removed) {
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    const int root = removed == 0 ? 1 : 0;
    std::vector<int> stack{root};
    seen[static_cast<std::size_t>(root)] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(u)]) {
        if (w == removed || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    return reached == total - (removed >= 0 ? 1 : 0);
  };
  if (!connected_without(-1)) return false;
  for (int v = 0; v < total; ++v) {
    if (!connected_without(v)) return false;
  }
  return true;
}

}  // namespace convexham

#endif  // CONVEXHAM_ORACLE_HPP

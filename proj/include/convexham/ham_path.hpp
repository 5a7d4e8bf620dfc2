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

#ifndef CONVEXHAM_HAM_PATH_HPP
#define CONVEXHAM_HAM_PATH_HPP

#include <optional>
#include <variant>
#include <vector>

#include "convexham/detail/active_pool.hpp"
#include "convexham/graph.hpp"
#include "convexham/properties.hpp"
#include "convexham/sequence.hpp"

namespace convexham {

enum class PathRefusalKind { NotConnected, NotMonotone, FailsPropertyB, SweepFailed };

inline const char* to_string(PathRefusalKind k) {
  switch (k) {
    case PathRefusalKind::NotConnected: return "NotConnected";
    case PathRefusalKind::NotMonotone: return "NotMonotone";
    case PathRefusalKind::FailsPropertyB: return "FailsPropertyB";
    case PathRefusalKind::SweepFailed: return "SweepFailed";
  }
  return "?";
}

/// Typed refusal of ham_path_monotone(). SweepFailed means every sweep broke
/// on a graph classified monotone and should never be observed.
struct HamPathRefusal {
  PathRefusalKind kind = PathRefusalKind::NotConnected;
  std::vector<NonMonotoneReason> reasons;  // NotMonotone
  std::optional<Violation> witness;        // FailsPropertyB
};

using PathResult = std::variant<HamSequence, HamPathRefusal>;

namespace detail {

// Greedy sweep x_1, y, x_2, y, ... taking at each x_i the unmarked neighbour
// with minimum right end (then smaller left, then input order). With
// end_on_y the sweep also takes a Y-vertex after x_n. Fails when the chosen
// Y-vertex cannot reach x_{i+1} or when a Y-vertex is left unmarked.
inline std::optional<std::vector<Vertex>> min_right_sweep(const ConvexBipartiteGraph& g, int excluded, bool end_on_y) {
  const int n = g.n();
  ActivePool pool(g);
  if (excluded >= 0) pool.take(excluded);
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(g.vertex_count()));
  int used = excluded >= 0 ? 1 : 0;
  for (int i = 1; i <= n; ++i) {
    seq.push_back(Vertex::x(i));
    if (i == n && !end_on_y) break;
    pool.admit(i);
    const int y = pool.best(i);
    if (y < 0) return std::nullopt;
    if (i < n && g.y(y).right < i + 1) return std::nullopt;
    pool.take(y);
    ++used;
    seq.push_back(Vertex::y(y));
  }
  if (used != g.y_count()) return std::nullopt;
  return seq;
}

// Neighbour of x_1 with minimum right end (then input order), or -1.
inline int min_right_at_first(const ConvexBipartiteGraph& g) {
  int pick = -1;
  for (int j = 0; j < g.y_count(); ++j) {
    if (g.y(j).left != 1) continue;
    if (pick < 0 || g.y(j).right < g.y(pick).right) pick = j;
  }
  return pick;
}

inline std::optional<std::vector<Vertex>> led_by_y(const ConvexBipartiteGraph& g, bool end_on_y) {
  const int head = min_right_at_first(g);
  if (head < 0) return std::nullopt;
  auto rest = min_right_sweep(g, head, end_on_y);
  if (!rest) return std::nullopt;
  rest->insert(rest->begin(), Vertex::y(head));
  return rest;
}

}  // namespace detail

/// Hamiltonian path for monotone graphs.
///
/// The size regime fixes the endpoint kind: |Y| = n - 1 gives an X-X sweep;
/// |Y| = n tries the X-Y sweep and otherwise restarts as a Y-X path (the
/// minimum-right neighbour of x_1, then an X-X sweep of the rest);
/// |Y| = n + 1 gives a Y-Y path (that same lead vertex, then an X-Y sweep).
/// Classification runs first; non-monotone graphs are refused with reasons.
inline PathResult ham_path_monotone(const ConvexBipartiteGraph& g, const CheckOptions& opt = {}) {
  if (!is_connected(g)) return HamPathRefusal{PathRefusalKind::NotConnected, {}, std::nullopt};
  auto cls = classify(g, opt);
  if (cls.kind == ClassKind::FailsPropertyB) {
    return HamPathRefusal{PathRefusalKind::FailsPropertyB, {}, std::move(cls.witness)};
  }
  if (cls.kind == ClassKind::NonMonotone) {
    return HamPathRefusal{PathRefusalKind::NotMonotone, std::move(cls.reasons), std::nullopt};
  }

  const int n = g.n();
  const int m = g.y_count();
  std::optional<std::vector<Vertex>> seq;
  if (m == n - 1) {
    seq = detail::min_right_sweep(g, -1, false);
  } else if (m == n) {
    seq = detail::min_right_sweep(g, -1, true);
    if (!seq) seq = detail::led_by_y(g, false);
  } else if (m == n + 1) {
    seq = detail::led_by_y(g, true);
  }
  if (!seq) return HamPathRefusal{PathRefusalKind::SweepFailed, {}, std::nullopt};
  return HamSequence{SequenceKind::Path, std::move(*seq)};
}

}  // namespace convexham

#endif  // CONVEXHAM_HAM_PATH_HPP

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

#ifndef CONVEXHAM_HAM_CYCLE_HPP
#define CONVEXHAM_HAM_CYCLE_HPP

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "convexham/detail/active_pool.hpp"
#include "convexham/graph.hpp"
#include "convexham/properties.hpp"
#include "convexham/sequence.hpp"

namespace convexham {

enum class NoCycleReason { SizeMismatch, DegreeOneY, Disconnected, StuckPrefix };

inline const char* to_string(NoCycleReason r) {
  switch (r) {
    case NoCycleReason::SizeMismatch: return "SizeMismatch";
    case NoCycleReason::DegreeOneY: return "DegreeOneY";
    case NoCycleReason::Disconnected: return "Disconnected";
    case NoCycleReason::StuckPrefix: return "StuckPrefix";
  }
  return "?";
}

/// Why no cycle was produced. `violated` is the Property A clause the graph
/// breaks, found by the fast property check so it can be replayed.
struct NoCycleWitness {
  NoCycleReason reason = NoCycleReason::SizeMismatch;
  int stuck_at = 0;  // clique index for StuckPrefix
  int y = -1;        // offending Y-vertex for DegreeOneY
  std::optional<Violation> violated;
};

/// Per-iteration record of the labelled path, for tests and tracing.
struct CycleTrace {
  struct Step {
    int i = 0;
    std::vector<Vertex> path;  // A-end ... x_1 ... B-end
    int labeled_x = 0;
    int labeled_y = 0;
  };
  std::vector<Step> steps;
};

using CycleResult = std::variant<HamSequence, NoCycleWitness>;

namespace detail {

inline NoCycleWitness no_cycle(const ConvexBipartiteGraph& g, NoCycleReason reason, int stuck_at = 0, int y = -1) {
  NoCycleWitness w{reason, stuck_at, y, std::nullopt};
  w.violated = check_property_A(g, CheckOptions{CheckMode::Fast, kDefaultExactCap}).witness;
  return w;
}

}  // namespace detail

/// Hamiltonian cycle by the clique sweep over the interval view.
///
/// The path is grown as two arms hanging off x_1, with endpoints A and B.
/// Iteration i extends the arm whose endpoint has level i (B when both do),
/// otherwise the arm with the smaller level (B on ties), through x_i to the
/// unlabelled conductor of C_i with minimum level; candidate ties break by
/// smaller left end, then input order. x_n closes the cycle. O(n + |E|).
inline CycleResult ham_cycle(const ConvexBipartiteGraph& g, CycleTrace* trace = nullptr) {
  const int n = g.n();
  if (n < 2 || g.y_count() != n) return detail::no_cycle(g, NoCycleReason::SizeMismatch);
  for (int j = 0; j < g.y_count(); ++j) {
    if (g.y(j).is_pendant()) return detail::no_cycle(g, NoCycleReason::DegreeOneY, 0, j);
  }
  if (!is_connected(g)) return detail::no_cycle(g, NoCycleReason::Disconnected);

  detail::ActivePool pool(g);
  // Arms grow outward from x_1: arm_a = (A_1, x_2?, ...). Endpoint = back().
  std::vector<Vertex> arm_a;
  std::vector<Vertex> arm_b;
  arm_a.reserve(static_cast<std::size_t>(n));
  arm_b.reserve(static_cast<std::size_t>(n));

  auto record = [&](int i) {
    if (!trace) return;
    CycleTrace::Step s;
    s.i = i;
    s.path.assign(arm_a.rbegin(), arm_a.rend());
    s.path.push_back(Vertex::x(1));
    s.path.insert(s.path.end(), arm_b.begin(), arm_b.end());
    for (const auto& v : s.path) (v.is_x() ? s.labeled_x : s.labeled_y) += 1;
    trace->steps.push_back(std::move(s));
  };

  pool.admit(1);
  const int first = pool.best(2);
  if (first >= 0) pool.take(first);
  const int second = first >= 0 ? pool.best(2) : -1;
  if (second < 0) return detail::no_cycle(g, NoCycleReason::StuckPrefix, 1);
  pool.take(second);
  arm_a.push_back(Vertex::y(first));
  arm_b.push_back(Vertex::y(second));
  record(1);

  for (int i = 2; i < n; ++i) {
    pool.admit(i);
    const int level_a = g.y(arm_a.back().index).right;
    const int level_b = g.y(arm_b.back().index).right;
    // An endpoint that missed its last chance cannot reach x_i.
    if (level_a < i || level_b < i) return detail::no_cycle(g, NoCycleReason::StuckPrefix, i);
    bool extend_b;
    if (level_b == i) {
      extend_b = true;
    } else if (level_a == i) {
      extend_b = false;
    } else {
      extend_b = level_b <= level_a;
    }
    const int next = pool.best(i + 1);
    if (next < 0) return detail::no_cycle(g, NoCycleReason::StuckPrefix, i);
    pool.take(next);
    auto& arm = extend_b ? arm_b : arm_a;
    arm.push_back(Vertex::x(i));
    arm.push_back(Vertex::y(next));
    record(i);
  }

  if (g.y(arm_a.back().index).right < n || g.y(arm_b.back().index).right < n) {
    return detail::no_cycle(g, NoCycleReason::StuckPrefix, n);
  }
  HamSequence cycle;
  cycle.kind = SequenceKind::Cycle;
  cycle.vertices.reserve(static_cast<std::size_t>(2 * n));
  cycle.vertices.push_back(Vertex::x(n));
  cycle.vertices.insert(cycle.vertices.end(), arm_a.rbegin(), arm_a.rend());
  cycle.vertices.push_back(Vertex::x(1));
  cycle.vertices.insert(cycle.vertices.end(), arm_b.begin(), arm_b.end());
  return cycle;
}

}  // namespace convexham

#endif  // CONVEXHAM_HAM_CYCLE_HPP

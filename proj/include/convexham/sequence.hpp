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

#ifndef CONVEXHAM_SEQUENCE_HPP
#define CONVEXHAM_SEQUENCE_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "convexham/graph.hpp"

namespace convexham {

enum class Side : std::uint8_t { X, Y };

/// A vertex reference: X-vertices by 1-based position, Y-vertices by their
/// 0-based index into ConvexBipartiteGraph::ys().
struct Vertex {
  Side side = Side::X;
  int index = 0;

  static constexpr Vertex x(int i) noexcept { return {Side::X, i}; }
  static constexpr Vertex y(int j) noexcept { return {Side::Y, j}; }
  bool is_x() const noexcept { return side == Side::X; }

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

enum class SequenceKind : std::uint8_t { Cycle, Path };

/// Endpoint sides of a path, first then last.
enum class EndpointKind : std::uint8_t { XX, XY, YX, YY };

inline std::string_view to_string(EndpointKind k) {
  switch (k) {
    case EndpointKind::XX: return "XX";
    case EndpointKind::XY: return "XY";
    case EndpointKind::YX: return "YX";
    case EndpointKind::YY: return "YY";
  }
  return "?";
}

/// A vertex sequence claimed to be a Hamiltonian cycle or path. Cycles do
/// not repeat their first vertex; the closing edge is implicit.
struct HamSequence {
  SequenceKind kind = SequenceKind::Path;
  std::vector<Vertex> vertices;

  std::optional<EndpointKind> endpoints() const {
    if (kind != SequenceKind::Path || vertices.empty()) return std::nullopt;
    const bool fx = vertices.front().is_x();
    const bool lx = vertices.back().is_x();
    if (fx && lx) return EndpointKind::XX;
    if (fx) return EndpointKind::XY;
    if (lx) return EndpointKind::YX;
    return EndpointKind::YY;
  }

  friend bool operator==(const HamSequence&, const HamSequence&) = default;
};

namespace detail {

inline bool vertex_in_range(const ConvexBipartiteGraph& g, const Vertex& v) {
  return v.is_x() ? (v.index >= 1 && v.index <= g.n()) : (v.index >= 0 && v.index < g.y_count());
}

inline bool adjacent(const ConvexBipartiteGraph& g, const Vertex& a, const Vertex& b) {
  if (a.side == b.side) return false;
  const Vertex& xv = a.is_x() ? a : b;
  const Vertex& yv = a.is_x() ? b : a;
  return g.y(yv.index).adjacent_to(xv.index);
}

// Spanning, repeat-free, in-range and consecutive pairs adjacent.
inline bool spans_as_walk(const ConvexBipartiteGraph& g, const std::vector<Vertex>& seq) {
  if (seq.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  std::vector<char> seen_x(static_cast<std::size_t>(g.n()) + 1, 0);
  std::vector<char> seen_y(static_cast<std::size_t>(g.y_count()), 0);
  for (const auto& v : seq) {
    if (!vertex_in_range(g, v)) return false;
    char& mark = v.is_x() ? seen_x[static_cast<std::size_t>(v.index)]
                          : seen_y[static_cast<std::size_t>(v.index)];
    if (mark) return false;
    mark = 1;
  }
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (!adjacent(g, seq[k], seq[k + 1])) return false;
  }
  return true;
}

}  // namespace detail

/// True iff seq is a Hamiltonian cycle of g (closing edge included).
inline bool verify_cycle(const ConvexBipartiteGraph& g, const HamSequence& seq) {
  const auto& v = seq.vertices;
  if (seq.kind != SequenceKind::Cycle || v.size() < 4) return false;
  if (!detail::spans_as_walk(g, v)) return false;
  return detail::adjacent(g, v.back(), v.front());
}

/// True iff seq is a Hamiltonian path of g.
inline bool verify_path(const ConvexBipartiteGraph& g, const HamSequence& seq) {
  if (seq.kind != SequenceKind::Path || seq.vertices.empty()) return false;
  return detail::spans_as_walk(g, seq.vertices);
}

/// Space-separated rendering: X-vertices as their position, Y-vertices by
/// label. A cycle repeats its first vertex at the end.
inline std::string format_sequence(const ConvexBipartiteGraph& g, const HamSequence& seq) {
  std::ostringstream os;
  auto put = [&](const Vertex& v) {
    if (v.is_x()) {
      os << v.index;
    } else {
      os << g.y(v.index).label;
    }
  };
  for (std::size_t k = 0; k < seq.vertices.size(); ++k) {
    if (k) os << ' ';
    put(seq.vertices[k]);
  }
  if (seq.kind == SequenceKind::Cycle && !seq.vertices.empty()) {
    os << ' ';
    put(seq.vertices.front());
  }
  return os.str();
}

/// Inverse of format_sequence(). Accepts space- or comma-separated tokens
/// with optional surrounding parentheses. Returns nullopt on an unknown
/// label or malformed number; a cycle's trailing repeat is dropped.
inline std::optional<HamSequence> parse_sequence(const ConvexBipartiteGraph& g, std::string_view text,
                                                 SequenceKind kind) {
  std::string cleaned(text);
  for (char& c : cleaned) {
    if (c == ',' || c == '(' || c == ')') c = ' ';
  }
  std::istringstream is(cleaned);
  HamSequence seq;
  seq.kind = kind;
  std::string tok;
  while (is >> tok) {
    if (detail::is_all_digits(tok)) {
      if (tok.size() > 9) return std::nullopt;
      seq.vertices.push_back(Vertex::x(std::stoi(tok)));
    } else {
      const int j = g.find_label(tok);
      if (j < 0) return std::nullopt;
      seq.vertices.push_back(Vertex::y(j));
    }
  }
  if (kind == SequenceKind::Cycle && seq.vertices.size() >= 2 &&
      seq.vertices.front() == seq.vertices.back()) {
    seq.vertices.pop_back();
  }
  return seq;
}

}  // namespace convexham

#endif  // CONVEXHAM_SEQUENCE_HPP

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

#ifndef CONVEXHAM_TEXT_FORMAT_HPP
#define CONVEXHAM_TEXT_FORMAT_HPP

// Graph files:
//
//   # comment
//   n k
//   label left right     (k lines)
//
// '#' starts a comment anywhere on a line; blank lines are ignored.

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "convexham/graph.hpp"

namespace convexham {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int parse_int(std::string_view s, int line, const char* what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace detail

/// Parses a graph file. Syntax problems raise ParseError; semantic ones
/// (ranges, labels) raise GraphError from build_graph().
inline ConvexBipartiteGraph parse_graph(std::string_view text) {
  int n = 0;
  int k = -1;
  int line_no = 0;
  std::vector<IntervalSpec> specs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = detail::split_fields(line);
    if (fields.empty()) continue;
    if (k < 0) {
      if (fields.size() != 2) throw ParseError(line_no, "header must be 'n k'");
      n = detail::parse_int(fields[0], line_no, "n");
      k = detail::parse_int(fields[1], line_no, "k");
      if (k < 0) throw ParseError(line_no, "k must be non-negative");
      specs.reserve(static_cast<std::size_t>(k));
      continue;
    }
    if (fields.size() != 3) throw ParseError(line_no, "expected 'label left right'");
    if (static_cast<int>(specs.size()) == k) throw ParseError(line_no, "more than k interval lines");
    specs.push_back({std::string(fields[0]), detail::parse_int(fields[1], line_no, "left"),
                     detail::parse_int(fields[2], line_no, "right")});
  }
  if (k < 0) throw ParseError(line_no, "missing header");
  if (static_cast<int>(specs.size()) != k) {
    throw ParseError(line_no, "expected " + std::to_string(k) + " interval lines, got " + std::to_string(specs.size()));
  }
  return build_graph(n, std::move(specs));
}

/// Canonical form: header, then Y ordered by (left, right, label).
inline std::string serialize_graph(const ConvexBipartiteGraph& g) {
  std::vector<const YVertex*> order;
  order.reserve(g.ys().size());
  for (const auto& y : g.ys()) order.push_back(&y);
  std::sort(order.begin(), order.end(), [](const YVertex* a, const YVertex* b) {
    if (a->left != b->left) return a->left < b->left;
    if (a->right != b->right) return a->right < b->right;
    return a->label < b->label;
  });
  std::ostringstream os;
  os << g.n() << ' ' << g.y_count() << '\n';
  for (const auto* y : order) os << y->label << ' ' << y->left << ' ' << y->right << '\n';
  return os.str();
}

/// The graph with Y reordered canonically. Algorithms break ties by input
/// order, so this is what a serialize/parse round trip hands them.
inline ConvexBipartiteGraph canonical(const ConvexBipartiteGraph& g) { return parse_graph(serialize_graph(g)); }

}  // namespace convexham

#endif  // CONVEXHAM_TEXT_FORMAT_HPP

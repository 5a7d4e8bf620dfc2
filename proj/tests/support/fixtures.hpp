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

#ifndef CONVEXHAM_TESTS_FIXTURES_HPP
#define CONVEXHAM_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "convexham/graph.hpp"
#include "convexham/sequence.hpp"

namespace fixtures {

using convexham::build_graph;
using convexham::ConvexBipartiteGraph;

// Six intervals whose interval graph has cliques C_1 = {1,a,c} ... C_6 = {6,d,e,f}.
inline ConvexBipartiteGraph fig1() {
  return build_graph(6, {{"a", 1, 3}, {"b", 2, 3}, {"c", 1, 4}, {"d", 3, 6}, {"e", 4, 6}, {"f", 5, 6}});
}

// Non-monotone: the pendant d hangs off x_3.
inline ConvexBipartiteGraph fig3() { return build_graph(4, {{"a", 1, 2}, {"b", 1, 3}, {"c", 2, 4}, {"d", 3, 3}}); }

inline convexham::HamSequence seq(const ConvexBipartiteGraph& g, const std::string& text,
                                  convexham::SequenceKind kind) {
  auto s = convexham::parse_sequence(g, text, kind);
  if (!s) throw std::runtime_error("bad sequence literal: " + text);
  return *s;
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(CONVEXHAM_TEST_DATA) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fixtures

#endif  // CONVEXHAM_TESTS_FIXTURES_HPP

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

#include <gtest/gtest.h>

#include "convexham/generators.hpp"
#include "convexham/ham_cycle.hpp"
#include "convexham/oracle.hpp"
#include "convexham/text_format.hpp"
#include "corpus.hpp"
#include "fixtures.hpp"

namespace convexham {
namespace {

TEST(HamCycle, Fig1GoldenTrace) {
  const auto g = fixtures::fig1();
  CycleTrace trace;
  const auto res = ham_cycle(g, &trace);
  ASSERT_TRUE(std::holds_alternative<HamSequence>(res));
  const auto& cyc = std::get<HamSequence>(res);
  EXPECT_EQ(format_sequence(g, cyc), "6 d 3 b 2 a 1 c 4 e 5 f 6");
  EXPECT_TRUE(verify_cycle(g, cyc));

  const std::vector<std::string> expected{
      "a 1 c",
      "b 2 a 1 c",
      "d 3 b 2 a 1 c",
      "d 3 b 2 a 1 c 4 e",
      "d 3 b 2 a 1 c 4 e 5 f",
  };
  ASSERT_EQ(trace.steps.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_EQ(trace.steps[k].i, static_cast<int>(k) + 1);
    EXPECT_EQ(format_sequence(g, HamSequence{SequenceKind::Path, trace.steps[k].path}), expected[k]);
  }
}

TEST(HamCycle, CompleteBipartiteTwoTwo) {
  const auto g = build_graph(2, {{"a", 1, 2}, {"b", 1, 2}});
  const auto res = ham_cycle(g);
  ASSERT_TRUE(std::holds_alternative<HamSequence>(res));
  EXPECT_TRUE(verify_cycle(g, std::get<HamSequence>(res)));
}

NoCycleWitness witness_of(const CycleResult& r) {
  EXPECT_TRUE(std::holds_alternative<NoCycleWitness>(r));
  return std::get<NoCycleWitness>(r);
}

TEST(HamCycle, Guards) {
  const auto pendant = build_graph(2, {{"a", 1, 1}, {"b", 1, 2}});
  auto w = witness_of(ham_cycle(pendant));
  EXPECT_EQ(w.reason, NoCycleReason::DegreeOneY);
  EXPECT_EQ(w.y, 0);
  ASSERT_TRUE(w.violated);
  EXPECT_TRUE(replay(pendant, *w.violated));
  EXPECT_FALSE(brute_ham_cycle(pendant).has_value());

  EXPECT_EQ(witness_of(ham_cycle(build_graph(1, {{"a", 1, 1}}))).reason, NoCycleReason::SizeMismatch);
  const auto k23 = build_graph(2, {{"a", 1, 2}, {"b", 1, 2}, {"c", 1, 2}});
  w = witness_of(ham_cycle(k23));
  EXPECT_EQ(w.reason, NoCycleReason::SizeMismatch);
  EXPECT_EQ(w.violated->kind, BoundKind::CardinalityBound);

  const auto split = build_graph(4, {{"a", 1, 2}, {"b", 1, 2}, {"c", 3, 4}, {"d", 3, 4}});
  w = witness_of(ham_cycle(split));
  EXPECT_EQ(w.reason, NoCycleReason::Disconnected);
  ASSERT_TRUE(w.violated);
  EXPECT_TRUE(replay(split, *w.violated));
}

TEST(HamCycle, StuckPrefixCarriesReplayableViolation) {
  // Connected, |Y| = n, no pendant, yet x_2..x_3 gets three intervals.
  const auto g = build_graph(4, {{"a", 1, 4}, {"b", 2, 3}, {"c", 2, 3}, {"d", 2, 3}});
  const auto w = witness_of(ham_cycle(g));
  EXPECT_EQ(w.reason, NoCycleReason::StuckPrefix);
  ASSERT_TRUE(w.violated);
  EXPECT_TRUE(replay(g, *w.violated));
}

// ham_cycle, the exhaustive search and the exact property check agree; every
// success verifies and every failure certifies itself.
void expect_three_way(const ConvexBipartiteGraph& g) {
  CycleTrace trace;
  const auto res = ham_cycle(g, &trace);
  const bool fast = std::holds_alternative<HamSequence>(res);
  const bool brute = brute_ham_cycle(g).has_value();
  const bool prop = check_property_A(g, {CheckMode::Exact, kDefaultExactCap}).holds;
  ASSERT_EQ(fast, brute) << serialize_graph(g);
  ASSERT_EQ(brute, prop) << serialize_graph(g);
  if (fast) {
    ASSERT_TRUE(verify_cycle(g, std::get<HamSequence>(res))) << serialize_graph(g);
    ASSERT_EQ(static_cast<int>(trace.steps.size()), g.n() - 1);
    for (const auto& st : trace.steps) {
      ASSERT_EQ(st.labeled_x, st.i);
      ASSERT_EQ(st.labeled_y, st.i + 1);
    }
  } else {
    const auto& w = std::get<NoCycleWitness>(res);
    ASSERT_TRUE(w.violated) << serialize_graph(g);
    ASSERT_TRUE(replay(g, *w.violated)) << serialize_graph(g);
  }
}

TEST(HamCycle, ThreeWayExhaustive) {
  corpus::for_each_small(4, 5, [](const ConvexBipartiteGraph& g) {
    if (is_connected(g)) expect_three_way(g);
  });
}

TEST(HamCycle, ThreeWayRandom) {
  for (const auto& g : corpus::random_connected(1500, 2024)) expect_three_way(g);
}

TEST(HamCycle, PlantedInstances) {
  const auto small = gen_planted_hc(4, 1, 0);
  EXPECT_TRUE(verify_cycle(small, fixtures::seq(small, "1 y1 2 y2 3 y3 4 y4", SequenceKind::Cycle)));
  for (int widen : {0, 1, 3}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto g = gen_planted_hc(200, seed, widen);
      const auto res = ham_cycle(g);
      ASSERT_TRUE(std::holds_alternative<HamSequence>(res));
      ASSERT_TRUE(verify_cycle(g, std::get<HamSequence>(res)));
    }
  }
}

}  // namespace
}  // namespace convexham

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
#include "convexham/properties.hpp"
#include "convexham/text_format.hpp"
#include "corpus.hpp"
#include "fixtures.hpp"
#include "naive.hpp"

namespace convexham {
namespace {

const CheckOptions kExact{CheckMode::Exact, kDefaultExactCap};
const CheckOptions kFast{CheckMode::Fast, kDefaultExactCap};

TEST(PropertyA, Fig1Holds) {
  EXPECT_TRUE(check_property_A(fixtures::fig1(), kExact).holds);
  EXPECT_TRUE(check_property_A(fixtures::fig1(), kFast).holds);
}

TEST(PropertyA, CompleteBipartiteTwoThree) {
  const auto g = build_graph(2, {{"a", 1, 2}, {"b", 1, 2}, {"c", 1, 2}});
  for (const auto& opt : {kExact, kFast}) {
    const auto v = check_property_A(g, opt);
    ASSERT_FALSE(v.holds);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->kind, BoundKind::CardinalityBound);
    EXPECT_EQ(v.witness->observed, 3);
    EXPECT_EQ(v.witness->bound, 2);
    EXPECT_TRUE(replay(g, *v.witness));
  }
}

TEST(PropertyA, PathOnFourVertices) {
  const auto g = build_graph(2, {{"a", 1, 1}, {"b", 1, 2}});
  const auto v = check_property_A(g, kExact);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->kind, BoundKind::CardinalityBound);
  EXPECT_EQ(v.witness->measure, Measure::StrongUnion);
  EXPECT_EQ(v.witness->observed, 1);
  EXPECT_EQ(v.witness->bound, 2);
  EXPECT_TRUE(replay(g, *v.witness));
}

TEST(PropertyA, ExactCap) {
  const auto g = gen_planted_hc(kDefaultExactCap + 1, 3, 1);
  EXPECT_THROW(check_property_A(g, kExact), CapExceeded);
  EXPECT_THROW(check_property_B(g, kExact), CapExceeded);
  EXPECT_TRUE(check_property_A(g, kFast).holds);
  EXPECT_NO_THROW(check_property_A(gen_planted_hc(kDefaultExactCap, 3, 1), kExact));
}

TEST(PropertyB, Examples) {
  EXPECT_TRUE(check_property_B(fixtures::fig3(), kExact).holds);
  EXPECT_TRUE(check_property_B(build_graph(2, {{"a", 1, 2}}), kExact).holds);
  const auto twin = build_graph(2, {{"a", 1, 1}, {"b", 1, 1}, {"c", 1, 2}});
  const auto v = check_property_B(twin, kExact);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->kind, BoundKind::PendantBound);
  EXPECT_TRUE(replay(twin, *v.witness));
}

TEST(PropertyB, ThreePendantsAndFullSpan) {
  // With n >= 2 the size and lower bounds already exclude a third pendant, so
  // the count clause can only fire on a single x.
  const auto three = build_graph(1, {{"a", 1, 1}, {"b", 1, 1}, {"c", 1, 1}});
  auto v = check_property_B(three, kExact);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->kind, BoundKind::PendantBound);
  EXPECT_EQ(v.witness->observed, 3);
  EXPECT_TRUE(replay(three, *v.witness));

  const auto crowded = build_graph(2, {{"a", 1, 2}, {"b", 1, 2}, {"c", 1, 2}, {"d", 1, 2}});
  v = check_property_B(crowded, kFast);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->kind, BoundKind::UpperBound);
  EXPECT_EQ(v.witness->observed, 4);
  EXPECT_EQ(v.witness->bound, 3);
  EXPECT_TRUE(replay(crowded, *v.witness));
}

TEST(Replay, RejectsTamperedWitness) {
  const auto g = build_graph(2, {{"a", 1, 2}, {"b", 1, 2}, {"c", 1, 2}});
  auto w = *check_property_A(g, kExact).witness;
  w.observed = 2;
  EXPECT_FALSE(replay(g, w));
  Violation lower{BoundKind::LowerBound, Measure::StrongUnion, {{1, 2}, {1, 2}}, 0, 2};
  EXPECT_FALSE(replay(g, lower));  // overlapping windows are not a chain
}

// Exact and fast agree with set building, and every failure replays.
void expect_modes_agree(const ConvexBipartiteGraph& g) {
  const bool a = naive::property_A(g);
  const bool b = naive::property_B(g);
  for (const auto& opt : {kExact, kFast}) {
    const auto va = check_property_A(g, opt);
    const auto vb = check_property_B(g, opt);
    ASSERT_EQ(va.holds, a) << serialize_graph(g);
    ASSERT_EQ(vb.holds, b) << serialize_graph(g);
    if (!va.holds) { ASSERT_TRUE(va.witness && replay(g, *va.witness)) << serialize_graph(g); }
    if (!vb.holds) { ASSERT_TRUE(vb.witness && replay(g, *vb.witness)) << serialize_graph(g); }
  }
}

TEST(Properties, AgreeWithSetBuildingExhaustive) {
  corpus::for_each_small(4, 5, [](const ConvexBipartiteGraph& g) { expect_modes_agree(g); });
}

TEST(Properties, AgreeWithSetBuildingRandom) {
  Rng rng(77);
  for (int t = 0; t < 600; ++t) {
    const int n = rng.uniform(1, 8);
    const int ny = rng.uniform(0, 10);
    expect_modes_agree(gen_random(n, ny, rng.below(1u << 30)));
  }
}

TEST(MaximalSets, Examples) {
  EXPECT_TRUE(maximal_interior_sets(fixtures::fig3()).empty());
  EXPECT_TRUE(maximal_interior_sets(fixtures::fig1()).empty());
  const auto g = build_graph(5, {{"a", 2, 3}, {"b", 2, 4}, {"c", 3, 4}, {"d", 1, 2}, {"e", 4, 5}});
  EXPECT_EQ(maximal_interior_sets(g), (std::vector<MaximalSet>{{2, 4}}));
}

TEST(MaximalSets, AgreeWithDefinition) {
  auto check = [](const ConvexBipartiteGraph& g) {
    std::vector<MaximalSet> expected;
    for (const auto& [p, q] : naive::maximal_sets(g)) expected.push_back({p, q});
    ASSERT_EQ(maximal_interior_sets(g), expected) << serialize_graph(g);
    if (check_property_B(g, kFast).holds) {
      ASSERT_EQ(has_tight_interior_window(g), !expected.empty()) << serialize_graph(g);
    }
  };
  corpus::for_each_small(5, 4, check);
  Rng rng(5);
  for (int t = 0; t < 2000; ++t) {
    const int n = rng.uniform(4, 10);
    check(gen_random(n, rng.uniform(n - 1, n + 1), rng.below(1u << 30)));
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(fixtures::fig1()).kind, ClassKind::Monotone);
  const auto g3 = fixtures::fig3();
  const auto c = classify(g3);
  ASSERT_EQ(c.kind, ClassKind::NonMonotone);
  ASSERT_EQ(c.reasons.size(), 1u);
  EXPECT_EQ(std::get<InteriorPendant>(c.reasons[0]), (InteriorPendant{g3.find_label("d"), 3}));
  const auto twin = classify(build_graph(2, {{"a", 1, 1}, {"b", 1, 1}, {"c", 1, 2}}));
  EXPECT_EQ(twin.kind, ClassKind::FailsPropertyB);
  ASSERT_TRUE(twin.witness);
  EXPECT_EQ(twin.witness->kind, BoundKind::PendantBound);
}

TEST(Classify, MaximalSetReason) {
  const auto g = build_graph(5, {{"a", 2, 3}, {"b", 2, 4}, {"c", 3, 4}, {"d", 1, 2}, {"e", 4, 5}});
  const auto c = classify(g);
  ASSERT_EQ(c.kind, ClassKind::NonMonotone);
  ASSERT_EQ(c.reasons.size(), 1u);
  EXPECT_EQ(std::get<MaximalSet>(c.reasons[0]), (MaximalSet{2, 4}));
}

TEST(Classify, AgreesWithDefinition) {
  corpus::for_each_small(4, 5, [](const ConvexBipartiteGraph& g) {
    const auto expected = naive::classify(g);
    const auto got = classify(g, kExact).kind;
    const auto mapped = got == ClassKind::Monotone      ? naive::Class::Monotone
                        : got == ClassKind::NonMonotone ? naive::Class::NonMonotone
                                                        : naive::Class::FailsB;
    ASSERT_EQ(mapped, expected) << serialize_graph(g);
  });
}

TEST(StructuralAudit, Fig3) {
  const auto g = fixtures::fig3();
  const auto a = structural_audit(g);
  EXPECT_TRUE(a.Q.empty());
  EXPECT_EQ(a.R, (std::vector<int>{g.find_label("d")}));
  EXPECT_EQ(a.lemmas.at("L-RQ").status, LemmaStatus::Pass);
  EXPECT_TRUE(a.all_pass_or_na());
}

TEST(StructuralAudit, Fig1) {
  const auto a = structural_audit(fixtures::fig1());
  EXPECT_TRUE(a.Q.empty());
  EXPECT_TRUE(a.R.empty());
  EXPECT_EQ(a.lemmas.at("L-xy").status, LemmaStatus::Pass);
  EXPECT_EQ(a.lemmas.at("L-size").status, LemmaStatus::Pass);
  EXPECT_EQ(a.lemmas.at("L-RQ").status, LemmaStatus::NotApplicable);
}

TEST(StructuralAudit, NotApplicableWhenBFails) {
  const auto a = structural_audit(build_graph(2, {{"a", 1, 1}, {"b", 1, 1}, {"c", 1, 2}}));
  ASSERT_EQ(a.lemmas.size(), 4u);
  for (const auto& [name, r] : a.lemmas) EXPECT_EQ(r.status, LemmaStatus::NotApplicable) << name;
}

TEST(StructuralAudit, LemmasHoldOnCorpus) {
  int applied = 0;
  auto check = [&](const ConvexBipartiteGraph& g) {
    const auto a = structural_audit(g);
    for (const auto& [name, r] : a.lemmas) {
      ASSERT_NE(r.status, LemmaStatus::Fail) << name << " " << r.detail << "\n" << serialize_graph(g);
      applied += r.status == LemmaStatus::Pass;
    }
    for (int j : a.R) {
      const int x = g.y(j).left;
      for (const auto& s : a.Q) ASSERT_FALSE(s.p <= x && x <= s.q);
    }
  };
  corpus::for_each_small(4, 5, check);
  for (const auto& g : corpus::random_connected(1500, 11)) check(g);
  EXPECT_GT(applied, 1000);
}

}  // namespace
}  // namespace convexham

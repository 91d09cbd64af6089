// Copyright 2026 The matchgame Authors.
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

#include "matchgame/game.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "matchgame/game_io.hpp"
#include "matchgame/matching.hpp"
#include "test_support.hpp"

namespace matchgame {
namespace {

using testing::Alloc;
using testing::FiveCycle;
using testing::FiveCycleNucleolus;
using testing::MatchingOf;
using testing::Q;

TEST(GameTest, EdgesAreCanonical) {
  const GameInstance g = GameInstance::WithDefaultLabels(
      3, {{2, 0, Rational(1)}, {1, 0, Rational(2)}});
  ASSERT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.edge(0).u, 0);
  EXPECT_EQ(g.edge(0).v, 1);
  EXPECT_EQ(g.edge(0).w, Rational(2));
  EXPECT_EQ(g.edge(1).v, 2);
  EXPECT_EQ(g.label(2), "3");
  EXPECT_EQ(g.incident(0).size(), 2u);
}

TEST(GameTest, RejectsMalformedGraphs) {
  auto kind = [](auto build) {
    try {
      build();
    } catch (const GameError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return GameError::Kind::kIo;
  };
  EXPECT_EQ(kind([] { GameInstance::WithDefaultLabels(2, {{0, 0, Rational(1)}}); }),
            GameError::Kind::kSelfLoop);
  EXPECT_EQ(kind([] {
              GameInstance::WithDefaultLabels(2, {{0, 1, Rational(1)}, {1, 0, Rational(2)}});
            }),
            GameError::Kind::kDuplicateEdge);
  EXPECT_EQ(kind([] { GameInstance::WithDefaultLabels(2, {{0, 1, Rational(-1)}}); }),
            GameError::Kind::kNegativeWeight);
  EXPECT_EQ(kind([] { GameInstance::WithDefaultLabels(2, {{0, 2, Rational(1)}}); }),
            GameError::Kind::kBadNode);
}

TEST(GameTest, MatchingFromEdgesChecksDisjointness) {
  const GameInstance g = FiveCycle();
  EXPECT_NO_THROW(MatchingOf(g, {{2, 3}, {4, 5}}));
  EXPECT_THROW(MatchingOf(g, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST(GameTest, ExcessOnFiveCycle) {
  const GameInstance g = FiveCycle();
  const Allocation x = FiveCycleNucleolus();
  EXPECT_EQ(Excess(g, x, MatchingOf(g, {{2, 3}, {4, 5}})), Q("-2/5"));
  EXPECT_EQ(Excess(g, x, Matching()), Rational(0));
  EXPECT_EQ(Excess(g, x, MatchingOf(g, {{1, 2}})), Q("-1/5"));
  // Every size-2 matching is tight and every edge has the same excess.
  for (const Matching& m : EnumerateMatchings(g)) {
    if (m.size() == 2) { EXPECT_EQ(Excess(g, x, m), Q("-2/5")); }
    if (m.size() == 1) { EXPECT_EQ(Excess(g, x, m), Q("-1/5")); }
  }
}

TEST(GameTest, CoalitionExcess) {
  const GameInstance g = FiveCycle();
  const Allocation x = FiveCycleNucleolus();
  const Coalition s({1, 2, 3, 4});
  EXPECT_EQ(CoalitionExcess(x, s, testing::EnumeratedValue(g, s)), Q("-2/5"));
  EXPECT_EQ(CoalitionExcess(x, Coalition(), Rational(0)), Rational(0));
  const GameInstance tri = testing::Triangle();
  const Coalition pair({0, 1});
  EXPECT_EQ(CoalitionExcess(Alloc({"1/3", "1/3", "1/3"}), pair,
                            testing::EnumeratedValue(tri, pair)),
            Q("-1/3"));
}

TEST(GameTest, Sym) {
  const GameInstance g = FiveCycle();
  const Allocation xs = FiveCycleNucleolus();
  EXPECT_EQ(Sym(xs, xs, Coalition({0, 2})), Rational(0));
  Allocation x = xs;
  x[0] += Q("1/10");
  EXPECT_EQ(Sym(x, xs, Coalition({0})), Q("1/10"));
  // Any two allocations agree on V.
  const Allocation y = Alloc({"1", "3/5", "2/5", "1/5", "4/5"});
  EXPECT_EQ(Sym(y, xs, Coalition::All(5)), Rational(0));
}

TEST(GameTest, CoalitionHelpers) {
  const Coalition a({3, 1, 1});
  EXPECT_EQ(a.members(), (std::vector<NodeId>{1, 3}));
  EXPECT_EQ(a.Mask(), 0b1010u);
  EXPECT_EQ(Coalition::FromMask(0b1010), a);
  EXPECT_TRUE(a.IsSubsetOf(Coalition::All(4)));
  EXPECT_FALSE(a.Intersects(Coalition({0, 2})));
}

TEST(GameTest, InducedKeepsEdgeMap) {
  const GameInstance g = FiveCycle();
  std::vector<EdgeId> map;
  const GameInstance h = g.Induced({1, 2, 3, 4}, &map);
  ASSERT_EQ(h.edge_count(), 3);
  for (EdgeId e = 0; e < h.edge_count(); ++e) EXPECT_EQ(h.edge(e).w, g.edge(map[e]).w);
  EXPECT_EQ(h.label(0), "2");
}

TEST(GameIoTest, EdgeListFiveCycle) {
  const GameInstance g =
      LoadGameString("5 5\n1 2 2\n2 3 1\n3 4 1\n4 5 1\n1 5 2\n", GameFormat::kEdgeList);
  EXPECT_EQ(g, FiveCycle());
}

TEST(GameIoTest, EdgeListK2) {
  EXPECT_EQ(LoadGameString("2 1\n1 2 1\n", GameFormat::kEdgeList), testing::K2());
}

TEST(GameIoTest, JsonExactWeight) {
  const GameInstance g = LoadGameString(
      R"({"nodes": ["a", "b"], "edges": [{"u": 0, "v": 1, "w": "3/2"}]})", GameFormat::kJson);
  EXPECT_EQ(g.edge(0).w, Q("3/2"));
  EXPECT_EQ(g.label(0), "a");
  const GameInstance d = LoadGameString(
      R"({"nodes": ["a", "b"], "edges": [{"u": 0, "v": 1, "w": "0.1"}]})", GameFormat::kJson);
  EXPECT_EQ(d.edge(0).w, Q("1/10"));
}

TEST(GameIoTest, SniffsFormat) {
  EXPECT_EQ(SniffFormat("  \n{\"nodes\": []}"), GameFormat::kJson);
  EXPECT_EQ(SniffFormat("2 1\n1 2 1"), GameFormat::kEdgeList);
}

TEST(GameIoTest, Errors) {
  auto kind = [](const char* text, GameFormat f) {
    try {
      LoadGameString(text, f);
    } catch (const GameError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "accepted: " << text;
    return GameError::Kind::kIo;
  };
  EXPECT_EQ(kind("2 1\n1 2 x\n", GameFormat::kEdgeList), GameError::Kind::kSyntax);
  EXPECT_EQ(kind("2 2\n1 2 1\n", GameFormat::kEdgeList), GameError::Kind::kSyntax);
  EXPECT_EQ(kind("2 1\n1 3 1\n", GameFormat::kEdgeList), GameError::Kind::kBadNode);
  EXPECT_EQ(kind("2 1\n1 1 1\n", GameFormat::kEdgeList), GameError::Kind::kSelfLoop);
  EXPECT_EQ(kind("2 1\n1 2 -1\n", GameFormat::kEdgeList), GameError::Kind::kNegativeWeight);
  EXPECT_EQ(kind("3 2\n1 2 1\n2 1 1\n", GameFormat::kEdgeList),
            GameError::Kind::kDuplicateEdge);
  EXPECT_EQ(kind("{\"nodes\": [", GameFormat::kJson), GameError::Kind::kSyntax);
  EXPECT_THROW(LoadGameFile("/nonexistent/game.json"), GameError);
}

TEST(GameIoTest, RoundTripRandom) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GameInstance g = RandomGame(3 + seed % 6, seed);
    for (GameFormat f : {GameFormat::kJson, GameFormat::kEdgeList}) {
      const std::string text = SaveGameString(g, f);
      const GameInstance back = LoadGameString(text, f);
      EXPECT_EQ(back, g) << testing::Seeded("round trip", seed);
      EXPECT_EQ(SaveGameString(back, f), text);
    }
  }
}

TEST(GameIoTest, RoundTripFractionalWeights) {
  const GameInstance g = GameInstance::WithDefaultLabels(
      3, {{0, 1, Q("3/2")}, {1, 2, Q("0")}, {0, 2, Q("7/9")}});
  for (GameFormat f : {GameFormat::kJson, GameFormat::kEdgeList})
    EXPECT_EQ(LoadGameString(SaveGameString(g, f), f), g);
}

}  // namespace
}  // namespace matchgame

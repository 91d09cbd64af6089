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

#include "matchgame/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "matchgame/game_io.hpp"
#include "matchgame/leastcore.hpp"
#include "test_support.hpp"

namespace matchgame {
namespace {

using testing::Alloc;
using testing::FiveCycle;
using testing::FiveCycleNucleolus;
using testing::MatchingOf;
using testing::Q;

GameInstance Relabel(const GameInstance& g, const std::vector<NodeId>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.w});
  return GameInstance::WithDefaultLabels(g.node_count(), std::move(edges));
}

TEST(OracleTest, CoalitionValuesMatchEnumeration) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const GameInstance g = RandomGame(3 + seed % 5, 7000 + seed);
    const std::vector<Rational> nu = AllCoalitionValues(g);
    ASSERT_EQ(nu.size(), 1u << g.node_count());
    for (unsigned m = 0; m < nu.size(); ++m)
      EXPECT_EQ(nu[m], testing::EnumeratedValue(g, Coalition::FromMask(m)));
  }
}

TEST(OracleTest, SizeLimit) {
  const GameInstance g = testing::Graph(kOracleMaxNodes + 1, {{1, 2, 1}});
  EXPECT_THROW(AllCoalitionValues(g), LimitError);
  EXPECT_THROW(BruteNucleolus(g), LimitError);
}

TEST(OracleTest, BruteNucleolusExamples) {
  EXPECT_EQ(BruteNucleolus(FiveCycle()).allocation, FiveCycleNucleolus());
  EXPECT_EQ(BruteNucleolus(testing::K2()).allocation, Allocation(2, Q("1/2")));
  EXPECT_EQ(BruteNucleolus(testing::Triangle()).allocation, Allocation(3, Q("1/3")));
}

TEST(ThetaTest, VectorIsSortedExcessList) {
  const GameInstance g = FiveCycle();
  const std::vector<Rational> theta = ThetaVector(g, FiveCycleNucleolus());
  ASSERT_EQ(theta.size(), 30u);
  EXPECT_TRUE(std::is_sorted(theta.begin(), theta.end()));
  EXPECT_EQ(theta.front(), Q("-2/5"));
  // Exactly the five four-node coalitions attain the minimum.
  EXPECT_EQ(std::count(theta.begin(), theta.end(), Q("-2/5")), 5);
}

TEST(ThetaTest, CompareExamples) {
  const GameInstance g = FiveCycle();
  const Allocation x = FiveCycleNucleolus();
  EXPECT_EQ(ThetaCompare(g, x, x), std::strong_ordering::equal);
  EXPECT_EQ(ThetaCompare(g, x, Allocation(5, Q("3/5"))), std::strong_ordering::greater);
  EXPECT_EQ(ThetaCompare(g, Allocation(5, Q("3/5")), x), std::strong_ordering::less);
}

TEST(ThetaTest, NucleolusDominatesRandomAllocations) {
  const GameInstance g = FiveCycle();
  const std::vector<Rational> nu = AllCoalitionValues(g);
  const Allocation x = FiveCycleNucleolus();
  std::mt19937_64 rng(55);
  for (int k = 0; k < 1000; ++k) {
    const Allocation y = RandomAllocation(g, rng);
    EXPECT_NE(ThetaCompare(nu, x, y), std::strong_ordering::less);
  }
}

TEST(PrekernelTest, Examples) {
  EXPECT_TRUE(PrekernelCheck(FiveCycle(), FiveCycleNucleolus()));
  EXPECT_FALSE(PrekernelCheck(FiveCycle(), Alloc({"3", "0", "0", "0", "0"})));
  EXPECT_TRUE(PrekernelCheck(testing::K2(), Alloc({"1/2", "1/2"})));
  EXPECT_FALSE(PrekernelCheck(testing::K2(), Alloc({"1", "0"})));
}

TEST(PrekernelTest, NucleolusPassesOnRandomGames) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const GameInstance g = RandomGame(3 + seed % 5, 7100 + seed);
    const Allocation x = BruteNucleolus(g).allocation;
    EXPECT_TRUE(PrekernelCheck(g, x)) << SaveGameString(g, GameFormat::kEdgeList);
  }
}

TEST(OracleTest, InvariantUnderRelabeling) {
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const GameInstance g = RandomGame(3 + seed % 5, 7200 + seed);
    std::vector<NodeId> perm(g.node_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Allocation x = BruteNucleolus(g).allocation;
    const Allocation y = BruteNucleolus(Relabel(g, perm)).allocation;
    for (NodeId v = 0; v < g.node_count(); ++v) EXPECT_EQ(x[v], y[perm[v]]);
  }
}

TEST(CardinalityLemmaTest, Examples) {
  const GameInstance g = FiveCycle();
  const Decomposition d = Decompose(g);
  const Allocation x = FiveCycleNucleolus();
  EXPECT_TRUE(VerifyCardinalityLemma(g, d, x, MatchingOf(g, {{1, 2}})));
  EXPECT_TRUE(VerifyCardinalityLemma(g, d, x, d.M_star));
  EXPECT_TRUE(VerifyCardinalityLemma(g, d, x, Matching()));
}

TEST(CardinalityLemmaTest, RejectsMatchingsOutsideMaximalSets) {
  // A path 3-4-5 hanging off a heavy triangle leaves its edges outside the blossom.
  const GameInstance g =
      testing::Graph(5, {{1, 2, 3}, {2, 3, 3}, {1, 3, 3}, {3, 4, 1}, {4, 5, 1}});
  const LeastcoreResult lc = SolveLeastcore(g);
  ASSERT_TRUE(CoreIsEmpty(lc));
  const Decomposition d = Decompose(g);
  bool outside = false;
  for (EdgeId e : d.E_plus) {
    outside = true;
    EXPECT_THROW(VerifyCardinalityLemma(g, d, d.x_star, Matching({e})), std::invalid_argument);
  }
  EXPECT_TRUE(outside);
}

TEST(CardinalityLemmaTest, HoldsOnRandomEmptyCores) {
  int seen = 0;
  for (std::uint64_t seed = 0; seen < 20; ++seed) {
    const GameInstance g = RandomGame(4 + seed % 5, 7300 + seed, 0.6);
    const LeastcoreResult lc = SolveLeastcore(g);
    if (!CoreIsEmpty(lc)) continue;
    ++seen;
    const Decomposition d = Decompose(g);
    std::vector<Allocation> points = SampleLeastcoreVertices(g, lc.epsilon1, 8, seed);
    points.push_back(d.x_star);
    for (const Matching& m : EnumerateMatchings(g)) {
      bool eligible = true;
      for (EdgeId e : m.edges())
        eligible = eligible && std::find(d.E_plus.begin(), d.E_plus.end(), e) == d.E_plus.end();
      if (!eligible) continue;
      for (const Allocation& x : points)
        EXPECT_TRUE(VerifyCardinalityLemma(g, d, x, m)) << SaveGameString(g, GameFormat::kEdgeList);
    }
  }
}

TEST(RestrictedCardinalityTest, Examples) {
  const GameInstance g = FiveCycle();
  const EdgeWeights c = ReducedWeights(g, FiveCycleNucleolus());
  CardinalityPolytopeReport r = VerifyRestrictedCardinality(g, c, 2);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.lp_value, Q("2/5"));
  EXPECT_EQ(r.best_matching, Q("2/5"));
  EXPECT_TRUE(r.ok());

  r = VerifyRestrictedCardinality(g, c, 0);
  EXPECT_EQ(r.lp_value, Rational(0));
  EXPECT_EQ(r.best_matching, Rational(0));
  EXPECT_TRUE(r.ok());

  r = VerifyRestrictedCardinality(g, c, 3);
  EXPECT_FALSE(r.feasible);

  const GameInstance two = testing::TwoTriangles();
  const EdgeWeights ct = ReducedWeights(two, Allocation(6, Q("1/3")));
  r = VerifyRestrictedCardinality(two, ct, 2);
  EXPECT_EQ(r.lp_value, Q("2/3"));
  EXPECT_EQ(r.best_matching, Q("2/3"));
  EXPECT_TRUE(VerifyRestrictedCardinalityPolytope(two, ct, 2));
}

TEST(RestrictedCardinalityTest, RandomWeights) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> num(-4, 9);
  int hypotheses = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const GameInstance g = RandomGame(4 + seed % 4, 7400 + seed, 0.6);
    if (g.edge_count() > kExhaustiveEdgeLimit) continue;
    EdgeWeights c;
    for (EdgeId e = 0; e < g.edge_count(); ++e) c.push_back(Rational(num(rng), 2));
    for (int t = 0; t <= g.node_count() / 2; ++t) {
      const CardinalityPolytopeReport r = VerifyRestrictedCardinality(g, c, t);
      EXPECT_TRUE(r.ok()) << "t=" << t << "\n" << SaveGameString(g, GameFormat::kEdgeList);
      hypotheses += r.dual_hypothesis;
    }
  }
  EXPECT_GT(hypotheses, 0);
}

TEST(SampleVerticesTest, PointsLieInLeastcore) {
  const GameInstance g = testing::TwoTriangles();
  const LeastcoreResult lc = SolveLeastcore(g);
  const std::vector<Allocation> a = SampleLeastcoreVertices(g, lc.epsilon1, 10, 3);
  EXPECT_EQ(a, SampleLeastcoreVertices(g, lc.epsilon1, 10, 3));
  for (const Allocation& x : a) {
    Rational total;
    for (const Rational& v : x) total += v;
    EXPECT_EQ(total, Rational(2));
    for (const Matching& m : EnumerateMatchings(g)) EXPECT_GE(Excess(g, x, m), lc.epsilon1);
  }
}

}  // namespace
}  // namespace matchgame

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

#include "matchgame/maschler.hpp"

#include <gtest/gtest.h>

#include "matchgame/game_io.hpp"
#include "matchgame/oracle.hpp"
#include "test_support.hpp"

namespace matchgame {
namespace {

using testing::FiveCycle;
using testing::FiveCycleNucleolus;
using testing::Q;

void ExpectSameChain(const NucleolusResult& a, const NucleolusResult& b,
                     const GameInstance& g) {
  EXPECT_EQ(a.allocation, b.allocation) << SaveGameString(g, GameFormat::kEdgeList);
  EXPECT_EQ(a.epsilons, b.epsilons) << SaveGameString(g, GameFormat::kEdgeList);
}

void ExpectChainShape(const NucleolusResult& r, const GameInstance& g) {
  const std::string where = SaveGameString(g, GameFormat::kEdgeList);
  EXPECT_EQ(static_cast<int>(r.epsilons.size()), r.rounds) << where;
  EXPECT_LE(r.rounds, g.node_count()) << where;
  for (size_t j = 1; j < r.epsilons.size(); ++j)
    EXPECT_LT(r.epsilons[j - 1], r.epsilons[j]) << where;
  ASSERT_EQ(static_cast<int>(r.dimensions.size()), r.rounds + 1) << where;
  ASSERT_EQ(r.unfixed_items.size(), r.dimensions.size());
  ASSERT_EQ(r.unfixed_counts.size(), r.dimensions.size());
  for (size_t j = 1; j < r.dimensions.size(); ++j) {
    EXPECT_LT(r.dimensions[j], r.dimensions[j - 1]) << where;
    EXPECT_LT(r.unfixed_items[j], r.unfixed_items[j - 1]) << where;
    EXPECT_LE(r.unfixed_counts[j], r.unfixed_counts[j - 1]) << where;
  }
  EXPECT_EQ(r.dimensions.back(), 0);
  EXPECT_EQ(r.unfixed_counts.back(), 0);
}

TEST(CompactTest, P1Examples) {
  EXPECT_EQ(CompactP1(FiveCycle(), Decompose(FiveCycle())).epsilon, Q("-2/5"));
  EXPECT_EQ(CompactP1(testing::Triangle(), Decompose(testing::Triangle())).epsilon, Q("-1/3"));
  const GameInstance two = testing::TwoTriangles();
  const CompactP1Result r = CompactP1(two, Decompose(two));
  // One edge from each triangle leaves a node of each uncovered.
  EXPECT_EQ(r.epsilon, Q("-2/3"));
  EXPECT_EQ(r.problem.variable_count(), 7);
}

TEST(CompactTest, FiveCycle) {
  const NucleolusResult r = RunCompact(FiveCycle());
  EXPECT_EQ(r.allocation, FiveCycleNucleolus());
  EXPECT_EQ(r.epsilons, std::vector<Rational>{Q("-2/5")});
  EXPECT_EQ(r.method, NucleolusMethod::kCompact);
  ExpectChainShape(r, FiveCycle());
}

TEST(CompactTest, TrianglesSplitEvenly) {
  EXPECT_EQ(RunCompact(testing::Triangle()).allocation, Allocation(3, Q("1/3")));
  EXPECT_EQ(RunCompact(testing::TwoTriangles()).allocation, Allocation(6, Q("1/3")));
}

TEST(CompactTest, ItemsCoverEveryFamily) {
  const GameInstance g = FiveCycle();
  const Decomposition d = Decompose(g);
  const std::vector<ChainItem> items = CompactItems(g, d);
  // No E+ edges, five nodes, five E* edges.
  EXPECT_EQ(items.size(), 10u);
}

TEST(ChainTest, RoundsByHand) {
  // Every proper coalition as an item, values read off the matching list.
  const GameInstance g = FiveCycle();
  std::vector<ChainItem> items;
  for (unsigned mask = 1; mask + 1 < (1u << 5); ++mask) {
    const Coalition s = Coalition::FromMask(mask);
    LinearFunctional f;
    for (NodeId v : s.members()) f.Add(v, 1);
    items.push_back({"S" + std::to_string(mask), f, testing::EnumeratedValue(g, s)});
  }
  LinearFunctional total;
  for (NodeId v = 0; v < 5; ++v) total.Add(v, 1);
  MaschlerState s = StartChain(5, {{total, Relation::kEqual, Rational(3), "grand"}}, items);
  EXPECT_FALSE(s.point.has_value());
  EXPECT_EQ(s.round, 0);
  while (!s.point) s = AdvanceRound(s, items);
  EXPECT_EQ(*s.point, FiveCycleNucleolus());
  EXPECT_EQ(s.epsilons.front(), Q("-2/5"));
  EXPECT_THROW(AdvanceRound(s, items), std::logic_error);
}

TEST(ChainTest, SingletonNeedsNoRound) {
  std::vector<Constraint> base;
  for (NodeId v = 0; v < 2; ++v)
    base.push_back({LinearFunctional::Var(v), Relation::kEqual, Rational(v + 1), "pin"});
  const std::vector<ChainItem> items = {{"node 1", LinearFunctional::Var(0), Rational(0)}};
  const MaschlerState s = StartChain(2, base, items);
  ASSERT_TRUE(s.point.has_value());
  const NucleolusResult r = RunChain(s, items, NucleolusMethod::kCompact);
  EXPECT_EQ(r.rounds, 0);
  EXPECT_EQ(r.allocation, (Allocation{Rational(1), Rational(2)}));
}

TEST(ChainTest, AllItemsPinnedIsAnInvariantError) {
  // x0 + x1 = 1 leaves a segment, but the only item is already constant.
  LinearFunctional sum = LinearFunctional::Var(0) + LinearFunctional::Var(1);
  const std::vector<ChainItem> items = {{"sum", sum, Rational(0)}};
  const MaschlerState s = StartChain(2, {{sum, Relation::kEqual, Rational(1), "grand"}}, items);
  EXPECT_THROW(AdvanceRound(s, items), InvariantError);
}

TEST(NonemptyCoreTest, Examples) {
  const NucleolusResult k2 = RunNonemptyCore(testing::K2());
  EXPECT_EQ(k2.allocation, Allocation(2, Q("1/2")));
  EXPECT_EQ(k2.method, NucleolusMethod::kNonemptyCore);
  for (const GameInstance& g : {testing::K2(), testing::Path3(), testing::FourCycle()}) {
    const NucleolusResult r = RunNonemptyCore(g);
    ExpectSameChain(r, BruteNucleolus(g), g);
    ExpectChainShape(r, g);
  }
}

TEST(NucleolusTest, Dispatch) {
  NucleolusResult r = Nucleolus(FiveCycle());
  EXPECT_EQ(r.allocation, FiveCycleNucleolus());
  EXPECT_EQ(r.method, NucleolusMethod::kCompact);
  r = Nucleolus(testing::K2());
  EXPECT_EQ(r.allocation, Allocation(2, Q("1/2")));
  EXPECT_EQ(r.method, NucleolusMethod::kNonemptyCore);
  r = Nucleolus(testing::Triangle());
  EXPECT_EQ(r.allocation, Allocation(3, Q("1/3")));
  EXPECT_EQ(Nucleolus(FiveCycle(), NucleolusMethod::kBruteForce).method,
            NucleolusMethod::kBruteForce);
  EXPECT_STREQ(ToString(NucleolusMethod::kNonemptyCore), "nonempty_core");
}

TEST(NucleolusTest, SmallGraphs) {
  // Isolated node, single node, edgeless graph.
  const GameInstance lone = testing::Graph(1, {});
  EXPECT_EQ(Nucleolus(lone).allocation, Allocation(1, Rational(0)));
  const GameInstance empty = testing::Graph(3, {});
  EXPECT_EQ(Nucleolus(empty).allocation, Allocation(3, Rational(0)));
  const GameInstance pendant = testing::Graph(3, {{1, 2, 4}});
  ExpectSameChain(Nucleolus(pendant), BruteNucleolus(pendant), pendant);
}

TEST(NucleolusTest, MatchesOracleOnMixedSuite) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const GameInstance g = RandomGame(4 + seed % 5, 6000 + seed);
    const NucleolusResult r = Nucleolus(g);
    ExpectSameChain(r, BruteNucleolus(g), g);
    ExpectChainShape(r, g);
  }
}

TEST(NucleolusTest, MatchesOracleOnEmptyCores) {
  int seen = 0;
  for (std::uint64_t seed = 0; seen < 30; ++seed) {
    const GameInstance g = RandomGame(5 + seed % 4, 5000 + seed, 0.6);
    if (!CoreIsEmpty(SolveLeastcore(g))) continue;
    ++seen;
    const NucleolusResult r = Nucleolus(g);
    EXPECT_EQ(r.method, NucleolusMethod::kCompact);
    ExpectSameChain(r, BruteNucleolus(g), g);
    ExpectChainShape(r, g);
  }
}

TEST(NucleolusTest, CompactWithoutEnumeration) {
  // max_enum_edges = 0 forces the iterative universal allocation and skips
  // the stored universal matchings.
  SolverOptions iterative;
  iterative.max_enum_edges = 0;
  int seen = 0;
  for (std::uint64_t seed = 0; seen < 15; ++seed) {
    const GameInstance g = RandomGame(5 + seed % 4, 5400 + seed, 0.6);
    if (!CoreIsEmpty(SolveLeastcore(g))) continue;
    ++seen;
    ExpectSameChain(Nucleolus(g, NucleolusMethod::kCompact, iterative), BruteNucleolus(g), g);
  }
}

TEST(NucleolusTest, FractionalWeights) {
  const GameInstance g = GameInstance::WithDefaultLabels(
      5, {{0, 1, Q("3/2")}, {1, 2, Q("1/3")}, {2, 3, Q("5/7")}, {3, 4, Q("1/2")},
          {0, 4, Q("9/4")}, {1, 3, Q("2/3")}});
  ExpectSameChain(Nucleolus(g), BruteNucleolus(g), g);
}

TEST(NucleolusTest, CoordinateCountCanStall) {
  // On the unit 4-cycle the first round pins edge sums but no single x(v).
  const NucleolusResult r = Nucleolus(testing::FourCycle());
  EXPECT_EQ(r.unfixed_counts, (std::vector<int>{4, 4, 0}));
  EXPECT_EQ(r.allocation, Allocation(4, Q("1/2")));
}

TEST(NucleolusTest, ObserverLabelsRounds) {
  SolverOptions opts;
  std::vector<std::string> labels;
  opts.lp_observer = [&](const std::string& label, const LpProblem&) { labels.push_back(label); };
  const NucleolusResult r = Nucleolus(testing::TwoTriangles(), NucleolusMethod::kCompact, opts);
  int rounds = 0;
  for (const std::string& l : labels) rounds += l.find("round ") != std::string::npos;
  EXPECT_EQ(rounds, r.rounds);
}

}  // namespace
}  // namespace matchgame

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

#include "matchgame/leastcore.hpp"

#include <gtest/gtest.h>

#include <set>

#include "matchgame/game_io.hpp"
#include "test_support.hpp"

namespace matchgame {
namespace {

using testing::FiveCycle;
using testing::FiveCycleNucleolus;
using testing::MatchingOf;
using testing::Q;

// Matchings M with max x(V(M)) over P1(eps1) equal to w(M) + eps1, i.e. tight
// at every leastcore point.
std::set<Matching> UniversalByLp(const GameInstance& g, const Rational& eps1) {
  const std::vector<Matching> all = EnumerateMatchings(g);
  LpProblem poly = LeastcorePolytope(g, eps1, all);
  std::set<Matching> out;
  for (const Matching& m : all) {
    LinearFunctional f;
    const Coalition covered = CoveredNodes(g, m);
    for (NodeId v : covered.members()) f.Add(v, 1);
    poly.SetObjective(Sense::kMaximize, f);
    const LpSolution s = SolveLp(poly);
    EXPECT_EQ(s.status, LpStatus::kOptimal);
    if (s.value == MatchingWeight(g, m) + eps1) out.insert(m);
  }
  return out;
}

std::set<Matching> TightAt(const GameInstance& g, const Allocation& x, const Rational& eps1) {
  std::set<Matching> out;
  for (const Matching& m : EnumerateMatchings(g))
    if (Excess(g, x, m) == eps1) out.insert(m);
  return out;
}

std::vector<GameInstance> EmptyCoreSuite(int count, std::uint64_t base, double p = 0.6) {
  std::vector<GameInstance> out;
  for (std::uint64_t seed = base; static_cast<int>(out.size()) < count; ++seed) {
    GameInstance g = RandomGame(4 + seed % 5, seed, p);
    if (CoreIsEmpty(SolveLeastcore(g))) out.push_back(std::move(g));
  }
  return out;
}

TEST(LeastcoreTest, Examples) {
  LeastcoreResult r = SolveLeastcore(FiveCycle());
  EXPECT_EQ(r.epsilon1, Q("-2/5"));
  EXPECT_TRUE(CoreIsEmpty(r));
  r = SolveLeastcore(testing::K2());
  EXPECT_EQ(r.epsilon1, Rational(0));
  EXPECT_FALSE(CoreIsEmpty(r));
  r = SolveLeastcore(testing::Triangle());
  EXPECT_EQ(r.epsilon1, Q("-1/3"));
  EXPECT_TRUE(CoreIsEmpty(r));
}

TEST(LeastcoreTest, GenerationMatchesExplicit) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const GameInstance g = RandomGame(4 + seed % 5, 2000 + seed);
    const LeastcoreResult a = SolveLeastcore(g);
    const LeastcoreResult b = SolveLeastcoreExplicit(g);
    EXPECT_EQ(a.epsilon1, b.epsilon1) << testing::Seeded("leastcore", seed);
    // The witness lies in P1(eps1).
    const Allocation& x = a.witness;
    Rational total;
    for (const Rational& v : x) {
      EXPECT_GE(v, Rational(0));
      total += v;
    }
    EXPECT_EQ(total, GameValue(g));
    for (const Matching& m : EnumerateMatchings(g)) EXPECT_GE(Excess(g, x, m), a.epsilon1);
  }
}

TEST(LeastcoreTest, GenerationOnEightNodes) {
  const GameInstance g = RandomGame(8, 4242, 0.7);
  const LeastcoreResult a = SolveLeastcore(g);
  EXPECT_EQ(a.epsilon1, SolveLeastcoreExplicit(g).epsilon1);
  EXPECT_LT(a.generated_constraints.size(), EnumerateMatchings(g).size());
}

TEST(LeastcoreTest, ObserverSeesGeneratedProblem) {
  SolverOptions opts;
  std::vector<std::string> labels;
  int rows = 0;
  opts.lp_observer = [&](const std::string& label, const LpProblem& p) {
    labels.push_back(label);
    rows = static_cast<int>(p.constraints().size());
  };
  const LeastcoreResult r = SolveLeastcore(FiveCycle(), opts);
  ASSERT_FALSE(labels.empty());
  EXPECT_EQ(labels.back(), "leastcore");
  EXPECT_GE(rows, static_cast<int>(r.generated_constraints.size()));
}

TEST(LeastcoreTest, MatchingRowName) {
  const GameInstance g = FiveCycle();
  EXPECT_EQ(MatchingRowName(g, MatchingOf(g, {{2, 3}, {4, 5}})), "M{2-3,4-5}");
}

TEST(UniversalTest, FiveCycle) {
  const GameInstance g = FiveCycle();
  const LeastcoreResult r = SolveLeastcore(g);
  const Allocation x = UniversalAllocation(g, r);
  EXPECT_EQ(x, FiveCycleNucleolus());
  const std::vector<Matching> u = UniversalMatchings(g, x, r.epsilon1);
  ASSERT_EQ(u.size(), 5u);
  for (const Matching& m : u) EXPECT_EQ(m.size(), 2);
}

TEST(UniversalTest, Triangle) {
  const GameInstance g = testing::Triangle();
  const LeastcoreResult r = SolveLeastcore(g);
  const Allocation x = UniversalAllocation(g, r);
  EXPECT_EQ(x, testing::Alloc({"1/3", "1/3", "1/3"}));
  const std::vector<Matching> u = UniversalMatchings(g, x, r.epsilon1);
  ASSERT_EQ(u.size(), 3u);
  for (const Matching& m : u) EXPECT_EQ(m.size(), 1);
}

TEST(UniversalTest, ZeroLeastcoreValueIncludesEmptyMatching) {
  const GameInstance g = testing::K2();
  const std::vector<Matching> u =
      UniversalMatchings(g, testing::Alloc({"1/2", "1/2"}), Rational(0));
  EXPECT_NE(std::find(u.begin(), u.end(), Matching()), u.end());
}

TEST(UniversalTest, TightSetIsExactlyUniversal) {
  for (const GameInstance& g : EmptyCoreSuite(25, 3000)) {
    const LeastcoreResult r = SolveLeastcore(g);
    const Allocation x = UniversalAllocation(g, r);
    EXPECT_EQ(TightAt(g, x, r.epsilon1), UniversalByLp(g, r.epsilon1))
        << SaveGameString(g, GameFormat::kEdgeList);
  }
}

TEST(UniversalTest, IterativePathAgrees) {
  SolverOptions iterative;
  iterative.max_enum_edges = 0;
  for (const GameInstance& g : EmptyCoreSuite(25, 3100)) {
    const LeastcoreResult r = SolveLeastcore(g);
    const Allocation x = UniversalAllocation(g, r, iterative);
    EXPECT_EQ(TightAt(g, x, r.epsilon1), UniversalByLp(g, r.epsilon1))
        << SaveGameString(g, GameFormat::kEdgeList);
  }
}

TEST(FaceTest, Examples) {
  const GameInstance g = FiveCycle();
  FaceDescription f = BuildFaceDescription(g, FiveCycleNucleolus(), true);
  EXPECT_TRUE(f.W.empty());
  ASSERT_EQ(f.laminar.sets.size(), 1u);
  EXPECT_EQ(f.laminar.sets[0], Coalition::All(5));
  EXPECT_TRUE(f.F.empty());

  const GameInstance tri = testing::Triangle();
  f = BuildFaceDescription(tri, testing::Alloc({"1/3", "1/3", "1/3"}), true);
  EXPECT_TRUE(f.W.empty());
  ASSERT_EQ(f.laminar.sets.size(), 1u);
  EXPECT_TRUE(f.F.empty());

  const GameInstance two = testing::TwoTriangles();
  f = BuildFaceDescription(two, Allocation(6, Q("1/3")), true);
  ASSERT_EQ(f.laminar.sets.size(), 2u);
  EXPECT_EQ(f.laminar.sets[0], Coalition({0, 1, 2}));
  EXPECT_EQ(f.laminar.sets[1], Coalition({3, 4, 5}));
}

TEST(DecompositionTest, FiveCycle) {
  const GameInstance g = FiveCycle();
  const Decomposition d = Decompose(g);
  EXPECT_EQ(d.epsilon1, Q("-2/5"));
  ASSERT_EQ(d.maximal_sets.size(), 1u);
  EXPECT_EQ(d.maximal_sets[0], Coalition::All(5));
  EXPECT_EQ(d.representatives, std::vector<NodeId>{0});
  EXPECT_TRUE(d.E_plus.empty());
  EXPECT_EQ(d.E_star.size(), 5u);
  EXPECT_EQ(d.M_star, MatchingOf(g, {{2, 3}, {4, 5}}));
  EXPECT_TRUE(d.W.empty());
  EXPECT_TRUE(d.F.empty());
  ASSERT_TRUE(d.universal_matchings.has_value());
  EXPECT_EQ(d.universal_matchings->size(), 5u);
}

TEST(DecompositionTest, Triangle) {
  const GameInstance g = testing::Triangle();
  const Decomposition d = Decompose(g);
  ASSERT_EQ(d.maximal_sets.size(), 1u);
  EXPECT_EQ(d.representatives, std::vector<NodeId>{0});
  EXPECT_TRUE(d.E_plus.empty());
  EXPECT_EQ(d.E_star.size(), 3u);
  EXPECT_EQ(d.M_star, MatchingOf(g, {{2, 3}}));
}

TEST(DecompositionTest, TwoTriangles) {
  const GameInstance g = testing::TwoTriangles();
  const Decomposition d = Decompose(g);
  ASSERT_EQ(d.maximal_sets.size(), 2u);
  EXPECT_EQ(d.representatives, (std::vector<NodeId>{0, 3}));
  EXPECT_TRUE(d.E_plus.empty());
  EXPECT_EQ(d.M_star, MatchingOf(g, {{2, 3}, {5, 6}}));
}

TEST(DecompositionTest, RejectsNonemptyCore) {
  EXPECT_THROW(Decompose(testing::K2()), std::invalid_argument);
  EXPECT_THROW(Decompose(testing::FourCycle()), std::invalid_argument);
}

TEST(DecompositionTest, StructureOnRandomInstances) {
  for (const GameInstance& g : EmptyCoreSuite(30, 3200)) {
    const Decomposition d = Decompose(g);
    const std::set<Matching> universal = UniversalByLp(g, d.epsilon1);
    // E* is the union of the universal matchings.
    std::set<EdgeId> union_edges;
    for (const Matching& m : universal) union_edges.insert(m.edges().begin(), m.edges().end());
    EXPECT_EQ(std::set<EdgeId>(d.E_star.begin(), d.E_star.end()), union_edges);
    EXPECT_TRUE(universal.count(d.M_star));
    // M* is near-perfect on each maximal set and misses its representative.
    const Coalition covered = CoveredNodes(g, d.M_star);
    for (size_t i = 0; i < d.maximal_sets.size(); ++i) {
      const Coalition& s = d.maximal_sets[i];
      EXPECT_EQ(s.members().front(), d.representatives[i]);
      EXPECT_FALSE(covered.contains(d.representatives[i]));
      for (NodeId v : s.members())
        if (v != d.representatives[i]) { EXPECT_TRUE(covered.contains(v)); }
    }
    // E+ holds exactly the edges not inside a maximal set.
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      bool inside = false;
      for (const Coalition& s : d.maximal_sets)
        inside = inside || (s.contains(g.edge(e).u) && s.contains(g.edge(e).v));
      EXPECT_EQ(std::count(d.E_plus.begin(), d.E_plus.end(), e) == 1, !inside);
    }
  }
}

}  // namespace
}  // namespace matchgame

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

#ifndef MATCHGAME_ORACLE_HPP_
#define MATCHGAME_ORACLE_HPP_

#include <compare>
#include <cstdint>
#include <vector>

#include "matchgame/game.hpp"
#include "matchgame/leastcore.hpp"
#include "matchgame/maschler.hpp"
#include "matchgame/matching.hpp"
#include "matchgame/options.hpp"

namespace matchgame {

// Largest node count the exhaustive routines accept.
inline constexpr int kOracleMaxNodes = 12;

// nu(S) for every S, indexed by bitmask. Throws LimitError above
// kOracleMaxNodes.
std::vector<Rational> AllCoalitionValues(const GameInstance& game);

// Maschler scheme over every proper nonempty coalition.
NucleolusResult BruteNucleolus(const GameInstance& game,
                               const SolverOptions& options = {});

// Excesses x(S) - nu(S) over proper nonempty S, sorted ascending.
std::vector<Rational> ThetaVector(const std::vector<Rational>& values,
                                  const Allocation& x);
std::vector<Rational> ThetaVector(const GameInstance& game, const Allocation& x);

// Lexicographic order of the theta vectors; greater is closer to the
// nucleolus.
std::strong_ordering ThetaCompare(const std::vector<Rational>& values,
                                  const Allocation& x, const Allocation& y);
std::strong_ordering ThetaCompare(const GameInstance& game, const Allocation& x,
                                  const Allocation& y);

// For all i != j: the surplus of i against j, max nu(S) - x(S) over S with
// i in S and j not in S, equals the surplus of j against i.
bool PrekernelCheck(const GameInstance& game, const Allocation& x);

// Searches the subsets M' of M* whose edge count inside every maximal set
// matches that of M, for one with ex(x, M') <= ex(x, M). M must lie inside
// the maximal sets.
bool VerifyCardinalityLemma(const GameInstance& game, const Decomposition& dec,
                            const Allocation& x, const Matching& m);

struct CardinalityPolytopeReport {
  bool feasible = false;           // some matching has exactly t edges
  Rational lp_value;               // max c.x over the t-edge matching polytope
  Rational best_matching;          // best t-edge matching by enumeration
  bool dual_hypothesis = false;    // optimal dual with y = 0, laminar z found
  bool removal_holds = true;       // every optimal t-matching loses an edge
                                   // to some optimal (t-1)-matching
  bool ok() const {
    return (!feasible || lp_value == best_matching) &&
           (!dual_hypothesis || removal_holds);
  }
};

// Compares the LP over the t-edge matching polytope with enumeration and,
// when an optimal dual with y = 0 and laminar support exists and
// 2 <= t <= n/2, checks that each optimal t-matching contains an edge whose
// removal leaves an optimal (t-1)-matching. Needs |E| <= 16 and n <= 12.
CardinalityPolytopeReport VerifyRestrictedCardinality(const GameInstance& game,
                                                      const EdgeWeights& c, int t);
inline bool VerifyRestrictedCardinalityPolytope(const GameInstance& game,
                                                const EdgeWeights& c, int t) {
  return VerifyRestrictedCardinality(game, c, t).ok();
}

// Vertices of P1(eps1) obtained by optimizing random objectives over the
// explicit polytope. Deterministic in the seed.
std::vector<Allocation> SampleLeastcoreVertices(const GameInstance& game,
                                                const Rational& epsilon1, int count,
                                                std::uint64_t seed,
                                                const SolverOptions& options = {});

}  // namespace matchgame

#endif  // MATCHGAME_ORACLE_HPP_

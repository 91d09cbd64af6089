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

#ifndef MATCHGAME_MATCHING_HPP_
#define MATCHGAME_MATCHING_HPP_

#include <vector>

#include "matchgame/game.hpp"
#include "matchgame/options.hpp"

namespace matchgame {

// Per-edge weights indexed by EdgeId. May be negative.
using EdgeWeights = std::vector<Rational>;

// Instances with at most this many positive-weight edges are solved by
// exhaustive search; larger ones by the blossom algorithm.
inline constexpr int kExhaustiveEdgeLimit = 16;

struct WeightedMatchingResult {
  Matching matching;
  Rational value;
};

EdgeWeights GameWeights(const GameInstance& game);
// c(uv) = w(uv) - x(u) - x(v).
EdgeWeights ReducedWeights(const GameInstance& game, const Allocation& x);

WeightedMatchingResult MaxWeightMatching(const GameInstance& game,
                                         const EdgeWeights& c);
WeightedMatchingResult MaxWeightMatchingExhaustive(const GameInstance& game,
                                                   const EdgeWeights& c);
WeightedMatchingResult MaxWeightMatchingBlossom(const GameInstance& game,
                                                const EdgeWeights& c);

// Optimum over matchings avoiding every node with removed[v] set.
WeightedMatchingResult MaxWeightMatchingAvoiding(const GameInstance& game,
                                                 const EdgeWeights& c,
                                                 const std::vector<char>& removed);

// Best matching that contains e: c(e) plus the optimum on G minus both ends.
WeightedMatchingResult MaxWeightMatchingForcingEdge(const GameInstance& game,
                                                    const EdgeWeights& c, EdgeId e);
// Best matching that leaves v exposed: the optimum on G - v.
WeightedMatchingResult MaxWeightMatchingExposing(const GameInstance& game,
                                                 const EdgeWeights& c, NodeId v);

// nu(S): maximum weight matching on G[S] under w.
Rational CoalitionValue(const GameInstance& game, const Coalition& s);
Rational GameValue(const GameInstance& game);

// Every matching, the empty one included, in lexicographic order of sorted
// edge ids. Throws LimitError when |E| exceeds max_edges.
std::vector<Matching> EnumerateMatchings(const GameInstance& game,
                                         size_t max_edges = 24);

// Dual of the matching LP over Edmonds' description:
//   y_u + y_v + sum_{S containing u,v} z_S >= c(uv),  y, z >= 0,
// with objective sum y + sum (|S| - 1)/2 z_S.
struct MatchingDual {
  std::vector<Rational> y;
  std::vector<Coalition> odd_sets;
  std::vector<Rational> z;
};

struct LaminarFamily {
  std::vector<Coalition> sets;  // sorted by decreasing size, then members
  std::vector<int> parent;      // index of the smallest strict superset or -1
};

Rational DualObjective(const MatchingDual& dual);
// Slack of the dual constraint for edge e.
Rational DualSlack(const GameInstance& game, const EdgeWeights& c,
                   const MatchingDual& dual, EdgeId e);
bool IsDualFeasible(const GameInstance& game, const EdgeWeights& c,
                    const MatchingDual& dual);
bool IsLaminar(const std::vector<Coalition>& sets);
LaminarFamily BuildLaminarFamily(std::vector<Coalition> sets);

// Optimal dual with laminar odd-set support. For n <= 16 odd sets are
// generated lazily against the fractional matching LP; larger instances take
// the duals of a blossom run. Throws InvariantError if strong duality fails.
MatchingDual OptimalDuals(const GameInstance& game, const EdgeWeights& c);
MatchingDual OptimalDualsByLp(const GameInstance& game, const EdgeWeights& c);
MatchingDual OptimalDualsByBlossom(const GameInstance& game, const EdgeWeights& c);

// Rewrites crossing odd sets until the support is laminar. Feasibility and
// objective are preserved exactly.
MatchingDual Uncross(MatchingDual dual);

}  // namespace matchgame

#endif  // MATCHGAME_MATCHING_HPP_

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

#ifndef MATCHGAME_LEASTCORE_HPP_
#define MATCHGAME_LEASTCORE_HPP_

#include <optional>
#include <vector>

#include "matchgame/game.hpp"
#include "matchgame/lp.hpp"
#include "matchgame/matching.hpp"
#include "matchgame/options.hpp"

namespace matchgame {

struct LeastcoreResult {
  Rational epsilon1;
  Allocation witness;
  // Matchings whose rows were added by separation, in generation order.
  std::vector<Matching> generated_constraints;
};

// max eps s.t. x(V(M)) >= w(M) + eps for every matching M, x(V) = nu(G),
// x >= 0. Rows are generated by max-weight matching under w - x.
LeastcoreResult SolveLeastcore(const GameInstance& game,
                               const SolverOptions& options = {});
// Same LP with every matching listed up front.
LeastcoreResult SolveLeastcoreExplicit(const GameInstance& game,
                                       const SolverOptions& options = {});

inline bool CoreIsEmpty(const LeastcoreResult& result) {
  return result.epsilon1.sign() < 0;
}

// Row text used for the matching constraint of M, e.g. "M{1-2,3-4}".
std::string MatchingRowName(const GameInstance& game, const Matching& m);

// P1(eps1) over the variables x_0..x_{n-1}, one row per nonempty matching.
LpProblem LeastcorePolytope(const GameInstance& game, const Rational& epsilon1,
                            const std::vector<Matching>& matchings);

// A leastcore point whose tight matchings are exactly the universal ones.
// Uses the explicit polytope when |E| <= options.max_enum_edges, otherwise
// refines the witness iteratively and throws LimitError if that does not
// settle within its iteration budget.
Allocation UniversalAllocation(const GameInstance& game,
                               const LeastcoreResult& result,
                               const SolverOptions& options = {});

// Every matching M with x(V(M)) - w(M) = eps1. Enumerates, so bounded by
// options.max_enum_edges.
std::vector<Matching> UniversalMatchings(const GameInstance& game,
                                         const Allocation& x_star,
                                         const Rational& epsilon1,
                                         const SolverOptions& options = {});

// Optimal face of the matching polytope under c = w - x*, read off an
// optimal laminar dual by complementary slackness.
struct FaceDescription {
  Coalition W;  // degree constraints that must be tight
  LaminarFamily laminar;
  std::vector<EdgeId> F;  // edges with positive reduced cost in the dual
  MatchingDual dual;
};

// Throws InvariantError if W is nonempty while the core is empty.
FaceDescription BuildFaceDescription(const GameInstance& game,
                                     const Allocation& x_star, bool core_empty);

struct Decomposition {
  Rational epsilon1;
  Allocation x_star;
  LaminarFamily laminar;
  std::vector<Coalition> maximal_sets;  // ordered by smallest member
  std::vector<NodeId> representatives;  // smallest member of each maximal set
  Coalition W;
  std::vector<EdgeId> F;
  Matching M_star;
  std::vector<EdgeId> E_plus;  // edges with at most one end in each maximal set
  std::vector<EdgeId> E_star;  // edges of some universal matching
  std::optional<std::vector<Matching>> universal_matchings;
};

// Throws InvariantError naming the first structural check that fails.
Decomposition BuildDecomposition(const GameInstance& game,
                                 const Allocation& x_star,
                                 const Rational& epsilon1,
                                 const FaceDescription& face,
                                 const SolverOptions& options = {});

// Full pipeline. Throws std::invalid_argument when the core is not empty.
Decomposition Decompose(const GameInstance& game,
                        const SolverOptions& options = {});

}  // namespace matchgame

#endif  // MATCHGAME_LEASTCORE_HPP_

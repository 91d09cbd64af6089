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

#ifndef MATCHGAME_MASCHLER_HPP_
#define MATCHGAME_MASCHLER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "matchgame/game.hpp"
#include "matchgame/leastcore.hpp"
#include "matchgame/lp.hpp"
#include "matchgame/options.hpp"

namespace matchgame {

enum class NucleolusMethod { kCompact, kBruteForce, kNonemptyCore };

const char* ToString(NucleolusMethod method);

struct NucleolusResult {
  Allocation allocation;
  int rounds = 0;
  std::vector<Rational> epsilons;  // one per round, strictly increasing
  NucleolusMethod method = NucleolusMethod::kCompact;
  // Per-round bookkeeping: entry 0 describes the starting region, entry j
  // the polytope after round j.
  std::vector<int> unfixed_counts;  // coordinates x(v) not yet constant
  std::vector<int> unfixed_items;   // tracked functionals not yet constant
  std::vector<int> dimensions;      // affine dimension of the polytope
};

// A tracked functional. While unfixed it contributes lhs(x) - eps >= offset.
struct ChainItem {
  std::string name;
  LinearFunctional lhs;  // over x_0..x_{n-1} only
  Rational offset;
};

// Frozen system after a round. `active_constraints` describes the current
// polytope over x: the base rows, the equalities of its affine hull, and the
// latest row of every item that is still free.
struct MaschlerState {
  int node_count = 0;
  int round = 0;
  std::vector<Rational> epsilons;
  std::vector<Constraint> base;
  std::vector<Constraint> active_constraints;
  std::vector<std::optional<Rational>> fixed_items;  // pinned value per item
  std::vector<int> unfixed_counts;
  std::vector<int> unfixed_items;
  std::vector<int> dimensions;
  std::optional<Allocation> point;  // set once the polytope is a single point
};

// State before any round over the region given by `base` (x >= 0 implied).
MaschlerState StartChain(int node_count, std::vector<Constraint> base,
                         const std::vector<ChainItem>& items,
                         const SolverOptions& options = {});

// Solves max eps over the current polytope with one row per free item, then
// freezes the result and pins every item that became constant. Throws
// InvariantError when eps does not increase, when the round count exceeds
// the node count, or when no free item is left before the polytope is a point.
MaschlerState AdvanceRound(const MaschlerState& state,
                           const std::vector<ChainItem>& items,
                           const SolverOptions& options = {});

NucleolusResult RunChain(MaschlerState state, const std::vector<ChainItem>& items,
                         NucleolusMethod method, const SolverOptions& options = {});

// Items of the compact chain: E+ edges, then nodes, then E* edges.
std::vector<ChainItem> CompactItems(const GameInstance& game, const Decomposition& dec);

struct CompactP1Result {
  LpProblem problem;  // x_0..x_{n-1}, then eps
  Rational epsilon;
  Allocation point;
};

// Builds and solves the compact first-round LP. Throws InvariantError unless
// its optimum equals dec.epsilon1.
CompactP1Result CompactP1(const GameInstance& game, const Decomposition& dec,
                          const SolverOptions& options = {});

// Compact chain on an empty-core game.
NucleolusResult RunCompact(const GameInstance& game, const Decomposition& dec,
                           const SolverOptions& options = {});
NucleolusResult RunCompact(const GameInstance& game, const SolverOptions& options = {});

// Chain over singletons and edges, for games with a nonempty core. Items whose
// node set is all of V are left out, so K2 splits its weight equally.
NucleolusResult RunNonemptyCore(const GameInstance& game,
                                const SolverOptions& options = {});

// kCompact picks the compact or the nonempty-core chain by the sign of eps1.
NucleolusResult Nucleolus(const GameInstance& game,
                          NucleolusMethod method = NucleolusMethod::kCompact,
                          const SolverOptions& options = {});

}  // namespace matchgame

#endif  // MATCHGAME_MASCHLER_HPP_

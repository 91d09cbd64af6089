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

#ifndef MATCHGAME_RANDOM_GAME_HPP_
#define MATCHGAME_RANDOM_GAME_HPP_

#include <cstdint>
#include <random>

#include "matchgame/game.hpp"

namespace matchgame {

// Erdos-Renyi graph on n nodes: each pair is an edge with the given
// probability, weights uniform integers in [1, max_weight].
GameInstance RandomGame(int node_count, std::uint64_t seed,
                        double edge_probability = 0.5, int max_weight = 10);

// Nonnegative allocation with x(V) = nu(G), proportional to random integers.
Allocation RandomAllocation(const GameInstance& game, std::mt19937_64& rng);

}  // namespace matchgame

#endif  // MATCHGAME_RANDOM_GAME_HPP_

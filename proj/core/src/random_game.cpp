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

#include "matchgame/random_game.hpp"

#include "matchgame/matching.hpp"

namespace matchgame {

GameInstance RandomGame(int node_count, std::uint64_t seed, double edge_probability,
                        int max_weight) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  std::uniform_int_distribution<int> weight(1, max_weight);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < node_count; ++u) {
    for (NodeId v = u + 1; v < node_count; ++v) {
      if (coin(rng)) edges.push_back({u, v, weight(rng)});
    }
  }
  return GameInstance::WithDefaultLabels(node_count, std::move(edges));
}

Allocation RandomAllocation(const GameInstance& game, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> share(0, 20);
  const int n = game.node_count();
  std::vector<int> raw(n);
  long total = 0;
  for (int& r : raw) total += (r = share(rng));
  if (total == 0) {
    raw[0] = 1;
    total = 1;
  }
  const Rational nu = GameValue(game);
  Allocation x;
  for (int r : raw) x.push_back(nu * Rational(r, total));
  return x;
}

}  // namespace matchgame

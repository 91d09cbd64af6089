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

#include "matchgame/matching.hpp"

#include <functional>

#include "blossom.hpp"

namespace matchgame {
namespace {

std::vector<EdgeId> Candidates(const GameInstance& game, const EdgeWeights& c,
                               const std::vector<char>& removed) {
  if (static_cast<int>(c.size()) != game.edge_count())
    throw std::invalid_argument("weight vector size differs from edge count");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < game.edge_count(); ++e) {
    const Edge& ed = game.edge(e);
    if (c[e].sign() > 0 && !removed[ed.u] && !removed[ed.v]) out.push_back(e);
  }
  return out;
}

WeightedMatchingResult Exhaustive(const GameInstance& game, const EdgeWeights& c,
                                  const std::vector<EdgeId>& cand) {
  std::vector<char> used(game.node_count(), 0);
  std::vector<EdgeId> current;
  std::vector<EdgeId> best;
  Rational best_value;
  Rational value;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == cand.size()) {
      if (best_value < value) {
        best_value = value;
        best = current;
      }
      return;
    }
    const EdgeId e = cand[i];
    const Edge& ed = game.edge(e);
    if (!used[ed.u] && !used[ed.v]) {
      used[ed.u] = used[ed.v] = 1;
      current.push_back(e);
      value += c[e];
      rec(i + 1);
      value -= c[e];
      current.pop_back();
      used[ed.u] = used[ed.v] = 0;
    }
    rec(i + 1);
  };
  rec(0);
  return {Matching(std::move(best)), best_value};
}

WeightedMatchingResult Blossom(const GameInstance& game, const EdgeWeights& c,
                               const std::vector<EdgeId>& cand) {
  std::vector<internal::BlossomEdge<Rational>> edges;
  for (EdgeId e : cand) edges.push_back({game.edge(e).u, game.edge(e).v, c[e]});
  const auto result = internal::RunBlossom(
      game.node_count(), std::move(edges), [](const Rational& r) { return r / 2; });
  std::vector<EdgeId> chosen;
  Rational value;
  for (NodeId v = 0; v < game.node_count(); ++v) {
    const int u = result.mate[v];
    if (u > v) {
      const EdgeId e = *game.FindEdge(v, u);
      chosen.push_back(e);
      value += c[e];
    }
  }
  return {Matching(std::move(chosen)), value};
}

}  // namespace

EdgeWeights GameWeights(const GameInstance& game) {
  EdgeWeights w;
  for (const Edge& e : game.edges()) w.push_back(e.w);
  return w;
}

EdgeWeights ReducedWeights(const GameInstance& game, const Allocation& x) {
  EdgeWeights c;
  for (EdgeId e = 0; e < game.edge_count(); ++e)
    c.push_back(game.edge(e).w - EdgeSum(game, x, e));
  return c;
}

WeightedMatchingResult MaxWeightMatchingAvoiding(const GameInstance& game,
                                                 const EdgeWeights& c,
                                                 const std::vector<char>& removed) {
  const std::vector<EdgeId> cand = Candidates(game, c, removed);
  if (static_cast<int>(cand.size()) <= kExhaustiveEdgeLimit)
    return Exhaustive(game, c, cand);
  return Blossom(game, c, cand);
}

WeightedMatchingResult MaxWeightMatching(const GameInstance& game,
                                         const EdgeWeights& c) {
  return MaxWeightMatchingAvoiding(game, c, std::vector<char>(game.node_count(), 0));
}

WeightedMatchingResult MaxWeightMatchingExhaustive(const GameInstance& game,
                                                   const EdgeWeights& c) {
  return Exhaustive(game, c,
                    Candidates(game, c, std::vector<char>(game.node_count(), 0)));
}

WeightedMatchingResult MaxWeightMatchingBlossom(const GameInstance& game,
                                                const EdgeWeights& c) {
  return Blossom(game, c,
                 Candidates(game, c, std::vector<char>(game.node_count(), 0)));
}

WeightedMatchingResult MaxWeightMatchingForcingEdge(const GameInstance& game,
                                                    const EdgeWeights& c, EdgeId e) {
  std::vector<char> removed(game.node_count(), 0);
  removed[game.edge(e).u] = removed[game.edge(e).v] = 1;
  WeightedMatchingResult rest = MaxWeightMatchingAvoiding(game, c, removed);
  std::vector<EdgeId> edges = rest.matching.edges();
  edges.push_back(e);
  return {Matching(std::move(edges)), rest.value + c[e]};
}

WeightedMatchingResult MaxWeightMatchingExposing(const GameInstance& game,
                                                 const EdgeWeights& c, NodeId v) {
  std::vector<char> removed(game.node_count(), 0);
  removed[v] = 1;
  return MaxWeightMatchingAvoiding(game, c, removed);
}

Rational CoalitionValue(const GameInstance& game, const Coalition& s) {
  if (s.size() < 2) return 0;
  std::vector<char> removed(game.node_count(), 1);
  for (NodeId v : s.members()) removed[v] = 0;
  return MaxWeightMatchingAvoiding(game, GameWeights(game), removed).value;
}

Rational GameValue(const GameInstance& game) {
  return MaxWeightMatching(game, GameWeights(game)).value;
}

std::vector<Matching> EnumerateMatchings(const GameInstance& game,
                                         size_t max_edges) {
  if (static_cast<size_t>(game.edge_count()) > max_edges) {
    throw LimitError("matching enumeration needs |E| <= " +
                     std::to_string(max_edges) + ", got " +
                     std::to_string(game.edge_count()));
  }
  std::vector<Matching> out;
  std::vector<char> used(game.node_count(), 0);
  std::vector<EdgeId> current;
  std::function<void(EdgeId)> rec = [&](EdgeId from) {
    out.emplace_back(current);
    for (EdgeId e = from; e < game.edge_count(); ++e) {
      const Edge& ed = game.edge(e);
      if (used[ed.u] || used[ed.v]) continue;
      used[ed.u] = used[ed.v] = 1;
      current.push_back(e);
      rec(e + 1);
      current.pop_back();
      used[ed.u] = used[ed.v] = 0;
    }
  };
  rec(0);
  return out;
}

}  // namespace matchgame

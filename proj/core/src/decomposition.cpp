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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "matchgame/leastcore.hpp"

namespace matchgame {
namespace {

void Require(bool ok, const std::string& clause) {
  if (!ok) throw InvariantError("decomposition check failed: " + clause);
}

bool Inside(const Edge& e, const Coalition& s) {
  return s.contains(e.u) && s.contains(e.v);
}

}  // namespace

FaceDescription BuildFaceDescription(const GameInstance& game,
                                     const Allocation& x_star, bool core_empty) {
  FaceDescription face;
  const EdgeWeights c = ReducedWeights(game, x_star);
  face.dual = OptimalDuals(game, c);

  std::vector<NodeId> w;
  for (NodeId v = 0; v < game.node_count(); ++v) {
    if (face.dual.y[v].sign() > 0) w.push_back(v);
  }
  face.W = Coalition(std::move(w));
  if (core_empty && !face.W.empty())
    throw InvariantError("a degree dual is positive although the core is empty");

  std::vector<Coalition> support;
  for (size_t i = 0; i < face.dual.odd_sets.size(); ++i) {
    if (face.dual.z[i].sign() > 0) support.push_back(face.dual.odd_sets[i]);
  }
  face.laminar = BuildLaminarFamily(std::move(support));
  for (EdgeId e = 0; e < game.edge_count(); ++e) {
    if (DualSlack(game, c, face.dual, e).sign() > 0) face.F.push_back(e);
  }
  return face;
}

Decomposition BuildDecomposition(const GameInstance& game, const Allocation& x_star,
                                 const Rational& epsilon1,
                                 const FaceDescription& face,
                                 const SolverOptions& options) {
  Decomposition d;
  d.epsilon1 = epsilon1;
  d.x_star = x_star;
  d.laminar = face.laminar;
  d.W = face.W;
  d.F = face.F;

  Require(IsLaminar(d.laminar.sets), "support of z is laminar");
  for (size_t i = 0; i < d.laminar.sets.size(); ++i) {
    const Coalition& s = d.laminar.sets[i];
    Require(s.size() >= 3 && s.size() % 2 == 1, "laminar sets are odd with size >= 3");
    if (d.laminar.parent[i] < 0) d.maximal_sets.push_back(s);
  }
  std::sort(d.maximal_sets.begin(), d.maximal_sets.end(),
            [](const Coalition& a, const Coalition& b) {
              return a.members().front() < b.members().front();
            });

  const EdgeWeights c = ReducedWeights(game, x_star);
  const Rational optimum = MaxWeightMatching(game, c).value;
  Require(optimum == -epsilon1, "x* lies in P1(eps1) with a tight matching");

  std::vector<EdgeId> m_star;
  std::vector<char> in_maximal(game.edge_count(), 0);
  for (const Coalition& s : d.maximal_sets) {
    const NodeId rep = s.members().front();
    d.representatives.push_back(rep);
    const WeightedMatchingResult exposing = MaxWeightMatchingExposing(game, c, rep);
    Require(exposing.value == optimum,
            "a universal matching exposes representative " + game.label(rep));
    for (EdgeId e : exposing.matching.edges()) {
      if (Inside(game.edge(e), s)) m_star.push_back(e);
    }
    for (EdgeId e = 0; e < game.edge_count(); ++e) {
      if (Inside(game.edge(e), s)) in_maximal[e] = 1;
    }
  }
  d.M_star = Matching(std::move(m_star));

  for (EdgeId e = 0; e < game.edge_count(); ++e) {
    if (!in_maximal[e]) d.E_plus.push_back(e);
    if (MaxWeightMatchingForcingEdge(game, c, e).value == optimum)
      d.E_star.push_back(e);
  }

  std::vector<NodeId> expected;
  for (size_t i = 0; i < d.maximal_sets.size(); ++i) {
    for (NodeId v : d.maximal_sets[i].members()) {
      if (v != d.representatives[i]) expected.push_back(v);
    }
  }
  Require(CoveredNodes(game, d.M_star) == Coalition(std::move(expected)),
          "M* covers the maximal sets minus their representatives");
  Require(Excess(game, x_star, d.M_star) == epsilon1, "ex(x*, M*) = eps1");

  if (static_cast<size_t>(game.edge_count()) <= options.max_enum_edges)
    d.universal_matchings = UniversalMatchings(game, x_star, epsilon1, options);
  return d;
}

Decomposition Decompose(const GameInstance& game, const SolverOptions& options) {
  const LeastcoreResult lc = SolveLeastcore(game, options);
  if (!CoreIsEmpty(lc))
    throw std::invalid_argument("decomposition needs an empty core; eps1 = " +
                                lc.epsilon1.ToString());
  const Allocation x_star = UniversalAllocation(game, lc, options);
  const FaceDescription face = BuildFaceDescription(game, x_star, true);
  return BuildDecomposition(game, x_star, lc.epsilon1, face, options);
}

}  // namespace matchgame

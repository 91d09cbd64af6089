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

#include <string>

namespace matchgame {
namespace {

LinearFunctional CoveredSum(const GameInstance& game, const Matching& m) {
  LinearFunctional f;
  for (EdgeId e : m.edges()) {
    f.Add(game.edge(e).u, 1);
    f.Add(game.edge(e).v, 1);
  }
  return f;
}

// Variables x_v take ids 0..n-1; eps is id n.
LpProblem LeastcoreSkeleton(const GameInstance& game, VarId* eps) {
  LpProblem p;
  LinearFunctional total;
  for (NodeId v = 0; v < game.node_count(); ++v) {
    p.AddVariable("x_" + game.label(v));
    total.Add(v, 1);
  }
  *eps = p.AddVariable("eps", false);
  p.AddConstraint(std::move(total), Relation::kEqual, GameValue(game), "grand");
  p.SetObjective(Sense::kMaximize, LinearFunctional::Var(*eps));
  return p;
}

Constraint MatchingRow(const GameInstance& game, const Matching& m, VarId eps) {
  LinearFunctional lhs = CoveredSum(game, m);
  lhs.Add(eps, -1);
  return {std::move(lhs), Relation::kGreaterEqual, MatchingWeight(game, m),
          MatchingRowName(game, m)};
}

LeastcoreResult Finish(const GameInstance& game, const LpSolution& sol,
                       const char* what) {
  if (sol.status != LpStatus::kOptimal)
    throw InvariantError(std::string(what) + " LP ended " + ToString(sol.status));
  LeastcoreResult out;
  out.epsilon1 = sol.value;
  out.witness.assign(sol.point.begin(), sol.point.begin() + game.node_count());
  return out;
}

}  // namespace

std::string MatchingRowName(const GameInstance& game, const Matching& m) {
  std::string name = "M{";
  for (size_t i = 0; i < m.edges().size(); ++i) {
    const Edge& e = game.edge(m.edges()[i]);
    if (i > 0) name += ',';
    name += game.label(e.u) + "-" + game.label(e.v);
  }
  return name + "}";
}

LeastcoreResult SolveLeastcore(const GameInstance& game,
                               const SolverOptions& options) {
  VarId eps;
  LpProblem p = LeastcoreSkeleton(game, &eps);
  p.AddConstraint(MatchingRow(game, Matching(), eps));
  std::vector<Matching> generated;
  const Separator separate =
      [&](const std::vector<Rational>& point) -> std::optional<Constraint> {
    const Allocation x(point.begin(), point.begin() + game.node_count());
    WeightedMatchingResult best = MaxWeightMatching(game, ReducedWeights(game, x));
    if (best.value <= -point[eps]) return std::nullopt;
    generated.push_back(best.matching);
    return MatchingRow(game, best.matching, eps);
  };
  const LpSolution sol = SolveWithGeneration(p, separate, options.lp);
  options.Observe("leastcore", p);
  LeastcoreResult out = Finish(game, sol, "leastcore");
  out.generated_constraints = std::move(generated);
  return out;
}

LeastcoreResult SolveLeastcoreExplicit(const GameInstance& game,
                                       const SolverOptions& options) {
  VarId eps;
  LpProblem p = LeastcoreSkeleton(game, &eps);
  for (const Matching& m : EnumerateMatchings(game, options.max_enum_edges))
    p.AddConstraint(MatchingRow(game, m, eps));
  options.Observe("leastcore-explicit", p);
  return Finish(game, SolveLp(p, options.lp), "explicit leastcore");
}

LpProblem LeastcorePolytope(const GameInstance& game, const Rational& epsilon1,
                            const std::vector<Matching>& matchings) {
  LpProblem p;
  LinearFunctional total;
  for (NodeId v = 0; v < game.node_count(); ++v) {
    p.AddVariable("x_" + game.label(v));
    total.Add(v, 1);
  }
  p.AddConstraint(std::move(total), Relation::kEqual, GameValue(game), "grand");
  for (const Matching& m : matchings) {
    if (m.empty()) continue;
    p.AddConstraint(CoveredSum(game, m), Relation::kGreaterEqual,
                    MatchingWeight(game, m) + epsilon1, MatchingRowName(game, m));
  }
  return p;
}

std::vector<Matching> UniversalMatchings(const GameInstance& game,
                                         const Allocation& x_star,
                                         const Rational& epsilon1,
                                         const SolverOptions& options) {
  std::vector<Matching> out;
  for (Matching& m : EnumerateMatchings(game, options.max_enum_edges)) {
    if (Excess(game, x_star, m) == epsilon1) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace matchgame

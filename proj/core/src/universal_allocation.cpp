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

#include <string>

#include "blossom.hpp"
#include "matchgame/leastcore.hpp"

namespace matchgame {
namespace {

// Lexicographic pair: maximizing (c, d) picks a c-optimal matching with the
// largest d among those.
struct Lex {
  Rational c;
  Rational d;

  friend Lex operator+(const Lex& a, const Lex& b) { return {a.c + b.c, a.d + b.d}; }
  friend Lex operator-(const Lex& a, const Lex& b) { return {a.c - b.c, a.d - b.d}; }
  friend bool operator==(const Lex&, const Lex&) = default;
  friend bool operator<(const Lex& a, const Lex& b) {
    return a.c < b.c || (a.c == b.c && a.d < b.d);
  }
};

Matching LexMaxMatching(const GameInstance& game, const EdgeWeights& c,
                        const std::vector<Rational>& d) {
  std::vector<internal::BlossomEdge<Lex>> edges;
  for (EdgeId e = 0; e < game.edge_count(); ++e) {
    const int s = c[e].sign();
    if (s > 0 || (s == 0 && d[e].sign() > 0))
      edges.push_back({game.edge(e).u, game.edge(e).v, Lex{c[e], d[e]}});
  }
  const auto result = internal::RunBlossom(
      game.node_count(), std::move(edges),
      [](const Lex& a) { return Lex{a.c / 2, a.d / 2}; });
  std::vector<EdgeId> chosen;
  for (NodeId v = 0; v < game.node_count(); ++v) {
    if (result.mate[v] > v) chosen.push_back(*game.FindEdge(v, result.mate[v]));
  }
  return Matching(std::move(chosen));
}

std::vector<Rational> Incidence(const GameInstance& game, const Matching& m) {
  std::vector<Rational> chi(game.node_count());
  for (EdgeId e : m.edges()) {
    chi[game.edge(e).u] = 1;
    chi[game.edge(e).v] = 1;
  }
  return chi;
}

// Basis of the vectors orthogonal to every row of the space.
std::vector<std::vector<Rational>> OrthogonalBasis(const RowSpace& space) {
  const int n = space.dimension();
  std::vector<int> pivot_of_row;
  std::vector<char> is_pivot(n, 0);
  for (const auto& row : space.basis()) {
    int p = 0;
    while (row[p].is_zero()) ++p;
    pivot_of_row.push_back(p);
    is_pivot[p] = 1;
  }
  std::vector<std::vector<Rational>> out;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> h(n);
    h[f] = 1;
    for (size_t r = 0; r < pivot_of_row.size(); ++r)
      h[pivot_of_row[r]] = -space.basis()[r][f];
    out.push_back(std::move(h));
  }
  return out;
}

// Maximizer of x(V(target)) over P1(eps1), rows generated by separation.
LpSolution MaximizeCoverage(const GameInstance& game, const LeastcoreResult& lc,
                            const Matching& target, const SolverOptions& options) {
  std::vector<Matching> rows = lc.generated_constraints;
  LpProblem p = LeastcorePolytope(game, lc.epsilon1, rows);
  LinearFunctional objective;
  for (EdgeId e : target.edges()) {
    objective.Add(game.edge(e).u, 1);
    objective.Add(game.edge(e).v, 1);
  }
  p.SetObjective(Sense::kMaximize, objective);
  const Rational bound = -lc.epsilon1;
  const Separator separate =
      [&](const std::vector<Rational>& x) -> std::optional<Constraint> {
    WeightedMatchingResult best = MaxWeightMatching(game, ReducedWeights(game, x));
    if (best.value <= bound) return std::nullopt;
    LpProblem one = LeastcorePolytope(game, lc.epsilon1, {best.matching});
    return one.constraints().back();
  };
  LpSolution sol = SolveWithGeneration(p, separate, options.lp);
  options.Observe("universal-coverage", p);
  return sol;
}

Allocation IterativeUniversal(const GameInstance& game, const LeastcoreResult& lc,
                              const SolverOptions& options) {
  const int n = game.node_count();
  const Rational optimum = -lc.epsilon1;
  Allocation x = lc.witness;
  RowSpace certified(n);
  certified.Insert(std::vector<Rational>(n, Rational(1)));

  const int budget = 4 * game.edge_count() + 8;
  for (int iter = 0; iter < budget; ++iter) {
    const EdgeWeights c = ReducedWeights(game, x);
    std::optional<Matching> open;
    for (const auto& h : OrthogonalBasis(certified)) {
      for (int sign : {1, -1}) {
        std::vector<Rational> d(game.edge_count());
        for (EdgeId e = 0; e < game.edge_count(); ++e)
          d[e] = (h[game.edge(e).u] + h[game.edge(e).v]) * sign;
        Matching m = LexMaxMatching(game, c, d);
        Rational cm, dm;
        for (EdgeId e : m.edges()) {
          cm += c[e];
          dm += d[e];
        }
        if (cm != optimum)
          throw InvariantError("witness is not a leastcore point: best reduced "
                               "matching value " + cm.ToString());
        if (dm.sign() > 0) {
          open = std::move(m);
          break;
        }
      }
      if (open) break;
    }
    // Every tight matching has an incidence vector in the certified span.
    if (!open) return x;

    const LpSolution best = MaximizeCoverage(game, lc, *open, options);
    if (best.status != LpStatus::kOptimal)
      throw InvariantError("coverage LP over the leastcore ended " +
                           std::string(ToString(best.status)));
    if (best.value == MatchingWeight(game, *open) + lc.epsilon1) {
      certified.Insert(Incidence(game, *open));
    } else {
      for (NodeId v = 0; v < n; ++v) x[v] = (x[v] + best.point[v]) / 2;
    }
  }
  throw LimitError("universal allocation not settled after " +
                   std::to_string(budget) + " refinement steps");
}

}  // namespace

Allocation UniversalAllocation(const GameInstance& game, const LeastcoreResult& result,
                               const SolverOptions& options) {
  if (static_cast<size_t>(game.edge_count()) > options.max_enum_edges)
    return IterativeUniversal(game, result, options);
  const LpProblem polytope = LeastcorePolytope(
      game, result.epsilon1, EnumerateMatchings(game, options.max_enum_edges));
  options.Observe("leastcore-polytope", polytope);
  return RelativeInteriorPoint(polytope, options.lp);
}

}  // namespace matchgame

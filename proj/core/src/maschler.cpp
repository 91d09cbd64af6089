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

#include "matchgame/maschler.hpp"

#include <stdexcept>

#include "matchgame/matching.hpp"
#include "matchgame/oracle.hpp"

namespace matchgame {
namespace {

LpProblem Region(int n, const std::vector<Constraint>& rows) {
  LpProblem p;
  for (int v = 0; v < n; ++v) p.AddVariable("x" + std::to_string(v));
  for (const Constraint& c : rows) p.AddConstraint(c);
  return p;
}

Constraint ItemRow(const ChainItem& item, const Rational& eps) {
  return {item.lhs, Relation::kGreaterEqual, item.offset + eps, item.name};
}

LinearFunctional EdgeFunctional(const GameInstance& game, EdgeId e) {
  return LinearFunctional::Var(game.edge(e).u) + LinearFunctional::Var(game.edge(e).v);
}

std::string EdgeName(const GameInstance& game, EdgeId e) {
  return game.label(game.edge(e).u) + "-" + game.label(game.edge(e).v);
}

// Records the starting-region entry of the bookkeeping vectors.
void RecordStart(MaschlerState& state, const std::vector<Constraint>& rows,
                 const std::vector<ChainItem>& items, const SolverOptions& options) {
  const int n = state.node_count;
  const AffineHull hull = AffineHull::Compute(Region(n, rows), options.lp);
  int unfixed = 0;
  for (int v = 0; v < n; ++v) {
    if (!hull.IsConstant(LinearFunctional::Var(v))) ++unfixed;
  }
  int free_items = 0;
  for (const ChainItem& item : items) free_items += hull.IsConstant(item.lhs) ? 0 : 1;
  state.unfixed_counts.push_back(unfixed);
  state.unfixed_items.push_back(free_items);
  state.dimensions.push_back(hull.dimension());
}

// Computes the hull of the current polytope, pins constant items, records
// the coordinate count and rewrites the active rows in reduced form.
void Settle(MaschlerState& state, const std::vector<ChainItem>& items,
            const SolverOptions& options) {
  const int n = state.node_count;
  const AffineHull hull = AffineHull::Compute(Region(n, state.active_constraints),
                                              options.lp);
  for (size_t i = 0; i < items.size(); ++i) {
    if (!state.fixed_items[i] && hull.IsConstant(items[i].lhs))
      state.fixed_items[i] = hull.ValueOf(items[i].lhs);
  }
  int unfixed = 0;
  for (int v = 0; v < n; ++v) {
    if (!hull.IsConstant(LinearFunctional::Var(v))) ++unfixed;
  }
  state.unfixed_counts.push_back(unfixed);
  int free_items = 0;
  for (const auto& f : state.fixed_items) free_items += f ? 0 : 1;
  state.unfixed_items.push_back(free_items);
  state.dimensions.push_back(hull.dimension());
  if (unfixed == 0) {
    state.point = Allocation(hull.point().begin(), hull.point().begin() + n);
    return;
  }

  // Rows of pinned items hold on the hull; older rows of free items are
  // dominated by their latest one since eps only grows.
  std::vector<Constraint> rows = state.base;
  for (const auto& eq : hull.equations()) {
    LinearFunctional f;
    for (int v = 0; v < n; ++v) {
      if (!eq[v].is_zero()) f.Add(v, eq[v]);
    }
    const Rational value = f.Evaluate(hull.point());
    rows.push_back({std::move(f), Relation::kEqual, value, "hull"});
  }
  if (!state.epsilons.empty()) {
    for (size_t i = 0; i < items.size(); ++i) {
      if (!state.fixed_items[i])
        rows.push_back(ItemRow(items[i], state.epsilons.back()));
    }
  }
  state.active_constraints = std::move(rows);
}

}  // namespace

const char* ToString(NucleolusMethod method) {
  switch (method) {
    case NucleolusMethod::kCompact:
      return "compact";
    case NucleolusMethod::kBruteForce:
      return "bruteforce";
    case NucleolusMethod::kNonemptyCore:
      return "nonempty_core";
  }
  return "?";
}

MaschlerState StartChain(int node_count, std::vector<Constraint> base,
                         const std::vector<ChainItem>& items,
                         const SolverOptions& options) {
  MaschlerState state;
  state.node_count = node_count;
  state.base = std::move(base);
  state.active_constraints = state.base;
  state.fixed_items.assign(items.size(), std::nullopt);
  Settle(state, items, options);
  return state;
}

MaschlerState AdvanceRound(const MaschlerState& state,
                           const std::vector<ChainItem>& items,
                           const SolverOptions& options) {
  if (state.point) throw std::logic_error("chain already reached a single point");
  const int n = state.node_count;
  LpProblem p = Region(n, state.active_constraints);
  const VarId eps = p.AddVariable("eps", false);
  bool any = false;
  for (size_t i = 0; i < items.size(); ++i) {
    if (state.fixed_items[i]) continue;
    any = true;
    p.AddConstraint(items[i].lhs - LinearFunctional::Var(eps),
                    Relation::kGreaterEqual, items[i].offset, items[i].name);
  }
  if (!any)
    throw InvariantError("every item is pinned but the polytope is not a point");
  p.SetObjective(Sense::kMaximize, LinearFunctional::Var(eps));
  options.Observe("round " + std::to_string(state.round + 1), p);
  const LpSolution sol = SolveLp(p, options.lp);
  if (sol.status != LpStatus::kOptimal)
    throw InvariantError("round " + std::to_string(state.round + 1) + " LP ended " +
                         ToString(sol.status));

  MaschlerState next = state;
  if (!next.epsilons.empty() && sol.value <= next.epsilons.back())
    throw InvariantError("eps did not increase: " + sol.value.ToString() +
                         " after " + next.epsilons.back().ToString());
  ++next.round;
  if (next.round > n)
    throw InvariantError("more rounds than nodes");
  next.epsilons.push_back(sol.value);
  for (size_t i = 0; i < items.size(); ++i) {
    if (!next.fixed_items[i])
      next.active_constraints.push_back(ItemRow(items[i], sol.value));
  }
  Settle(next, items, options);
  return next;
}

NucleolusResult RunChain(MaschlerState state, const std::vector<ChainItem>& items,
                         NucleolusMethod method, const SolverOptions& options) {
  while (!state.point) state = AdvanceRound(state, items, options);
  NucleolusResult out;
  out.allocation = *state.point;
  out.rounds = state.round;
  out.epsilons = state.epsilons;
  out.method = method;
  out.unfixed_counts = state.unfixed_counts;
  out.unfixed_items = state.unfixed_items;
  out.dimensions = state.dimensions;
  return out;
}

std::vector<ChainItem> CompactItems(const GameInstance& game, const Decomposition& dec) {
  std::vector<ChainItem> items;
  const Rational& eps1 = dec.epsilon1;
  for (EdgeId e : dec.E_plus) {
    items.push_back({"E+ " + EdgeName(game, e), EdgeFunctional(game, e),
                     game.edge(e).w - eps1});
  }
  for (NodeId v = 0; v < game.node_count(); ++v)
    items.push_back({"node " + game.label(v), LinearFunctional::Var(v), -eps1});
  // x(e) + eps <= w(e) + eps1, negated into the common form.
  for (EdgeId e : dec.E_star) {
    items.push_back({"E* " + EdgeName(game, e), EdgeFunctional(game, e) * Rational(-1),
                     -(game.edge(e).w + eps1)});
  }
  return items;
}

namespace {

// Rows of the compact first-round LP that do not involve eps.
std::vector<Constraint> CompactBase(const GameInstance& game, const Decomposition& dec) {
  std::vector<Constraint> rows;
  for (size_t i = 0; i < dec.maximal_sets.size(); ++i) {
    const NodeId rep = dec.representatives[i];
    for (NodeId u : dec.maximal_sets[i].members()) {
      if (u == rep) continue;
      rows.push_back({LinearFunctional::Var(u) - LinearFunctional::Var(rep),
                      Relation::kEqual, dec.x_star[u] - dec.x_star[rep],
                      "sym " + game.label(u) + "~" + game.label(rep)});
    }
  }
  for (EdgeId e : dec.E_star) {
    rows.push_back({EdgeFunctional(game, e), Relation::kLessEqual, game.edge(e).w,
                    "E* " + EdgeName(game, e)});
  }
  for (EdgeId e : dec.E_plus) {
    rows.push_back({EdgeFunctional(game, e), Relation::kGreaterEqual, game.edge(e).w,
                    "E+ " + EdgeName(game, e)});
  }
  LinearFunctional total;
  for (NodeId v = 0; v < game.node_count(); ++v) total.Add(v, 1);
  rows.push_back({std::move(total), Relation::kEqual, GameValue(game), "grand"});
  return rows;
}

LinearFunctional MStarFunctional(const GameInstance& game, const Matching& m) {
  LinearFunctional f;
  for (EdgeId e : m.edges()) f += EdgeFunctional(game, e);
  return f;
}

}  // namespace

CompactP1Result CompactP1(const GameInstance& game, const Decomposition& dec,
                          const SolverOptions& options) {
  LpProblem p = Region(game.node_count(), CompactBase(game, dec));
  const VarId eps = p.AddVariable("eps", false);
  p.AddConstraint(MStarFunctional(game, dec.M_star) - LinearFunctional::Var(eps),
                  Relation::kEqual, MatchingWeight(game, dec.M_star), "M*");
  p.SetObjective(Sense::kMaximize, LinearFunctional::Var(eps));
  options.Observe("compact round 1", p);
  const LpSolution sol = SolveLp(p, options.lp);
  if (sol.status != LpStatus::kOptimal)
    throw InvariantError(std::string("compact round 1 LP ended ") + ToString(sol.status));
  if (sol.value != dec.epsilon1)
    throw InvariantError("compact round 1 optimum " + sol.value.ToString() +
                         " differs from eps1 " + dec.epsilon1.ToString());
  return {std::move(p), sol.value,
          Allocation(sol.point.begin(), sol.point.begin() + game.node_count())};
}

NucleolusResult RunCompact(const GameInstance& game, const Decomposition& dec,
                           const SolverOptions& options) {
  const int n = game.node_count();
  const CompactP1Result p1 = CompactP1(game, dec, options);
  const std::vector<ChainItem> items = CompactItems(game, dec);

  std::vector<Constraint> base = CompactBase(game, dec);
  LinearFunctional total;
  for (NodeId v = 0; v < n; ++v) total.Add(v, 1);

  MaschlerState state;
  state.node_count = n;
  state.fixed_items.assign(items.size(), std::nullopt);
  RecordStart(state, {{total, Relation::kEqual, GameValue(game), "grand"}}, items,
              options);
  state.base = std::move(base);
  state.base.push_back({MStarFunctional(game, dec.M_star), Relation::kEqual,
                        MatchingWeight(game, dec.M_star) + p1.epsilon, "M*"});
  state.active_constraints = state.base;
  state.round = 1;
  state.epsilons.push_back(p1.epsilon);
  Settle(state, items, options);
  return RunChain(std::move(state), items, NucleolusMethod::kCompact, options);
}

NucleolusResult RunCompact(const GameInstance& game, const SolverOptions& options) {
  return RunCompact(game, Decompose(game, options), options);
}

NucleolusResult RunNonemptyCore(const GameInstance& game, const SolverOptions& options) {
  const int n = game.node_count();
  std::vector<ChainItem> items;
  for (NodeId v = 0; v < n; ++v) {
    if (n > 1) items.push_back({"node " + game.label(v), LinearFunctional::Var(v), 0});
  }
  for (EdgeId e = 0; e < game.edge_count(); ++e) {
    if (n > 2)
      items.push_back({"edge " + EdgeName(game, e), EdgeFunctional(game, e),
                       game.edge(e).w});
  }
  LinearFunctional total;
  for (NodeId v = 0; v < n; ++v) total.Add(v, 1);
  std::vector<Constraint> base = {{total, Relation::kEqual, GameValue(game), "grand"}};
  return RunChain(StartChain(n, std::move(base), items, options), items,
                  NucleolusMethod::kNonemptyCore, options);
}

NucleolusResult Nucleolus(const GameInstance& game, NucleolusMethod method,
                          const SolverOptions& options) {
  if (method == NucleolusMethod::kBruteForce) return BruteNucleolus(game, options);
  if (method == NucleolusMethod::kNonemptyCore) return RunNonemptyCore(game, options);
  const LeastcoreResult lc = SolveLeastcore(game, options);
  if (!CoreIsEmpty(lc)) return RunNonemptyCore(game, options);
  const Allocation x_star = UniversalAllocation(game, lc, options);
  const FaceDescription face = BuildFaceDescription(game, x_star, true);
  return RunCompact(game, BuildDecomposition(game, x_star, lc.epsilon1, face, options),
                    options);
}

}  // namespace matchgame

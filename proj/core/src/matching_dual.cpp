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
#include <map>

#include "blossom.hpp"
#include "matchgame/matching.hpp"

namespace matchgame {
namespace {

constexpr int kLazyOddSetNodeLimit = 16;
constexpr int kUncrossIterationCap = 100000;

int Popcount(unsigned mask) { return __builtin_popcount(mask); }

// Most violated odd-set inequality x(E(S)) <= (|S|-1)/2, or 0 if none.
unsigned MostViolatedOddSet(int n, const std::vector<std::vector<Rational>>& x) {
  const unsigned full = 1u << n;
  std::vector<Rational> inside(full);
  unsigned best = 0;
  Rational best_excess;
  for (unsigned mask = 1; mask < full; ++mask) {
    const int top = 31 - __builtin_clz(mask);
    const unsigned rest = mask & ~(1u << top);
    inside[mask] = inside[rest];
    for (int u = 0; u < top; ++u) {
      if ((rest >> u) & 1u && !x[top][u].is_zero()) inside[mask] += x[top][u];
    }
    const int size = Popcount(mask);
    if (size < 3 || size % 2 == 0) continue;
    const Rational excess = inside[mask] - Rational(size - 1, 2);
    if (excess.sign() > 0 && (best == 0 || best_excess < excess)) {
      best = mask;
      best_excess = excess;
    }
  }
  return best;
}

Coalition Intersection(const Coalition& a, const Coalition& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return Coalition(std::move(out));
}

Coalition Union(const Coalition& a, const Coalition& b) {
  std::vector<NodeId> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(),
                 b.members().end(), std::back_inserter(out));
  return Coalition(std::move(out));
}

Coalition Difference(const Coalition& a, const Coalition& b) {
  std::vector<NodeId> out;
  std::set_difference(a.members().begin(), a.members().end(), b.members().begin(),
                      b.members().end(), std::back_inserter(out));
  return Coalition(std::move(out));
}

bool Crossing(const Coalition& a, const Coalition& b) {
  return a.Intersects(b) && !a.IsSubsetOf(b) && !b.IsSubsetOf(a);
}

void CheckStrongDuality(const GameInstance& game, const EdgeWeights& c,
                        const MatchingDual& dual) {
  const Rational primal = MaxWeightMatching(game, c).value;
  if (!IsDualFeasible(game, c, dual))
    throw InvariantError("matching dual is infeasible");
  if (DualObjective(dual) != primal) {
    throw InvariantError("matching dual objective " + DualObjective(dual).ToString() +
                         " differs from primal optimum " + primal.ToString());
  }
}

}  // namespace

Rational DualObjective(const MatchingDual& dual) {
  Rational total;
  for (const Rational& y : dual.y) total += y;
  for (size_t i = 0; i < dual.odd_sets.size(); ++i)
    total += dual.z[i] * Rational(dual.odd_sets[i].size() - 1, 2);
  return total;
}

Rational DualSlack(const GameInstance& game, const EdgeWeights& c,
                   const MatchingDual& dual, EdgeId e) {
  const Edge& ed = game.edge(e);
  Rational lhs = dual.y[ed.u] + dual.y[ed.v];
  for (size_t i = 0; i < dual.odd_sets.size(); ++i) {
    if (dual.odd_sets[i].contains(ed.u) && dual.odd_sets[i].contains(ed.v))
      lhs += dual.z[i];
  }
  return lhs - c[e];
}

bool IsDualFeasible(const GameInstance& game, const EdgeWeights& c,
                    const MatchingDual& dual) {
  if (static_cast<int>(dual.y.size()) != game.node_count()) return false;
  if (dual.z.size() != dual.odd_sets.size()) return false;
  for (const Rational& y : dual.y) {
    if (y.sign() < 0) return false;
  }
  for (size_t i = 0; i < dual.z.size(); ++i) {
    if (dual.z[i].sign() < 0) return false;
    const int size = dual.odd_sets[i].size();
    if (size < 3 || size % 2 == 0) return false;
  }
  for (EdgeId e = 0; e < game.edge_count(); ++e) {
    if (DualSlack(game, c, dual, e).sign() < 0) return false;
  }
  return true;
}

bool IsLaminar(const std::vector<Coalition>& sets) {
  for (size_t i = 0; i < sets.size(); ++i) {
    for (size_t j = i + 1; j < sets.size(); ++j) {
      if (Crossing(sets[i], sets[j])) return false;
    }
  }
  return true;
}

LaminarFamily BuildLaminarFamily(std::vector<Coalition> sets) {
  if (!IsLaminar(sets)) throw InvariantError("family is not laminar");
  std::sort(sets.begin(), sets.end(), [](const Coalition& a, const Coalition& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  LaminarFamily family;
  family.parent.assign(sets.size(), -1);
  for (size_t i = 0; i < sets.size(); ++i) {
    for (size_t j = i; j-- > 0;) {
      if (sets[j].size() > sets[i].size() && sets[i].IsSubsetOf(sets[j])) {
        family.parent[i] = static_cast<int>(j);
        break;
      }
    }
  }
  family.sets = std::move(sets);
  return family;
}

MatchingDual OptimalDualsByLp(const GameInstance& game, const EdgeWeights& c) {
  const int n = game.node_count();
  if (n > kLazyOddSetNodeLimit)
    throw LimitError("odd-set scan supports at most 16 nodes");
  MatchingDual dual;
  dual.y.assign(n, Rational());
  std::vector<EdgeId> positive;
  for (EdgeId e = 0; e < game.edge_count(); ++e) {
    if (c[e].sign() > 0) positive.push_back(e);
  }
  if (positive.empty()) return dual;

  std::vector<unsigned> family;
  Rational primal_value;
  while (true) {
    LpProblem primal;
    for (EdgeId e : positive) primal.AddVariable("x" + std::to_string(e));
    LinearFunctional objective;
    for (size_t i = 0; i < positive.size(); ++i) objective.Add(static_cast<VarId>(i), c[positive[i]]);
    primal.SetObjective(Sense::kMaximize, objective);
    for (NodeId v = 0; v < n; ++v) {
      LinearFunctional degree;
      for (size_t i = 0; i < positive.size(); ++i) {
        const Edge& ed = game.edge(positive[i]);
        if (ed.u == v || ed.v == v) degree.Add(static_cast<VarId>(i), 1);
      }
      if (!degree.IsConstant()) primal.AddConstraint(degree, Relation::kLessEqual, 1);
    }
    for (unsigned mask : family) {
      LinearFunctional inside;
      for (size_t i = 0; i < positive.size(); ++i) {
        const Edge& ed = game.edge(positive[i]);
        if ((mask >> ed.u) & 1u && (mask >> ed.v) & 1u)
          inside.Add(static_cast<VarId>(i), 1);
      }
      primal.AddConstraint(inside, Relation::kLessEqual, Rational(Popcount(mask) - 1, 2));
    }
    const LpSolution sol = SolveLp(primal);
    if (sol.status != LpStatus::kOptimal)
      throw InvariantError("fractional matching LP not optimal");
    std::vector<std::vector<Rational>> x(n, std::vector<Rational>(n));
    for (size_t i = 0; i < positive.size(); ++i) {
      const Edge& ed = game.edge(positive[i]);
      x[ed.u][ed.v] = x[ed.v][ed.u] = sol.point[i];
    }
    const unsigned violated = MostViolatedOddSet(n, x);
    if (violated == 0) {
      primal_value = sol.value;
      break;
    }
    family.push_back(violated);
  }

  LpProblem dlp;
  for (NodeId v = 0; v < n; ++v) dlp.AddVariable("y" + std::to_string(v));
  for (size_t k = 0; k < family.size(); ++k) dlp.AddVariable("z" + std::to_string(k));
  LinearFunctional objective;
  for (NodeId v = 0; v < n; ++v) objective.Add(v, 1);
  for (size_t k = 0; k < family.size(); ++k)
    objective.Add(n + static_cast<int>(k), Rational(Popcount(family[k]) - 1, 2));
  dlp.SetObjective(Sense::kMinimize, objective);
  for (EdgeId e : positive) {
    const Edge& ed = game.edge(e);
    LinearFunctional row = LinearFunctional::Var(ed.u) + LinearFunctional::Var(ed.v);
    for (size_t k = 0; k < family.size(); ++k) {
      if ((family[k] >> ed.u) & 1u && (family[k] >> ed.v) & 1u)
        row.Add(n + static_cast<int>(k), 1);
    }
    dlp.AddConstraint(row, Relation::kGreaterEqual, c[e]);
  }
  const LpSolution dsol = SolveLp(dlp);
  if (dsol.status != LpStatus::kOptimal || dsol.value != primal_value)
    throw InvariantError("matching dual LP does not close the duality gap");
  for (NodeId v = 0; v < n; ++v) dual.y[v] = dsol.point[v];
  for (size_t k = 0; k < family.size(); ++k) {
    const Rational& z = dsol.point[n + k];
    if (z.sign() > 0) {
      dual.odd_sets.push_back(Coalition::FromMask(family[k]));
      dual.z.push_back(z);
    }
  }
  dual = Uncross(std::move(dual));
  CheckStrongDuality(game, c, dual);
  return dual;
}

MatchingDual OptimalDualsByBlossom(const GameInstance& game, const EdgeWeights& c) {
  std::vector<internal::BlossomEdge<Rational>> edges;
  for (EdgeId e = 0; e < game.edge_count(); ++e) {
    if (c[e].sign() > 0) edges.push_back({game.edge(e).u, game.edge(e).v, c[e]});
  }
  MatchingDual dual;
  dual.y.assign(game.node_count(), Rational());
  if (!edges.empty()) {
    const auto result = internal::RunBlossom(
        game.node_count(), std::move(edges), [](const Rational& r) { return r / 2; });
    for (NodeId v = 0; v < game.node_count(); ++v)
      dual.y[v] = result.vertex_dual2[v] / 2;
    for (size_t b = 0; b < result.blossoms.size(); ++b) {
      if (result.blossom_dual[b].sign() > 0) {
        dual.odd_sets.emplace_back(result.blossoms[b]);
        dual.z.push_back(result.blossom_dual[b]);
      }
    }
  }
  CheckStrongDuality(game, c, dual);
  return dual;
}

MatchingDual OptimalDuals(const GameInstance& game, const EdgeWeights& c) {
  if (game.node_count() <= kLazyOddSetNodeLimit) return OptimalDualsByLp(game, c);
  return OptimalDualsByBlossom(game, c);
}

MatchingDual Uncross(MatchingDual dual) {
  std::map<Coalition, Rational> z;
  for (size_t i = 0; i < dual.odd_sets.size(); ++i) {
    if (dual.z[i].sign() > 0) z[dual.odd_sets[i]] += dual.z[i];
  }
  auto add = [&](const Coalition& s, const Rational& amount) {
    if (s.size() >= 3) z[s] += amount;
  };
  for (int iter = 0;; ++iter) {
    if (iter > kUncrossIterationCap) throw InvariantError("uncrossing did not settle");
    const Coalition* s = nullptr;
    const Coalition* t = nullptr;
    for (auto a = z.begin(); a != z.end() && !s; ++a) {
      for (auto b = std::next(a); b != z.end(); ++b) {
        if (Crossing(a->first, b->first)) {
          s = &a->first;
          t = &b->first;
          break;
        }
      }
    }
    if (!s) break;
    const Coalition a = *s;
    const Coalition b = *t;
    const Rational alpha = std::min(z[a], z[b]);
    if ((z[a] -= alpha).is_zero()) z.erase(a);
    if ((z[b] -= alpha).is_zero()) z.erase(b);
    const Coalition inter = Intersection(a, b);
    if (inter.size() % 2 == 1) {
      add(inter, alpha);
      add(Union(a, b), alpha);
    } else {
      add(Difference(a, b), alpha);
      add(Difference(b, a), alpha);
      for (NodeId v : inter.members()) dual.y[v] += alpha;
    }
  }
  dual.odd_sets.clear();
  dual.z.clear();
  for (auto& [set, value] : z) {
    dual.odd_sets.push_back(set);
    dual.z.push_back(value);
  }
  return dual;
}

}  // namespace matchgame

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

#include "matchgame/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace matchgame {
namespace {

void CheckSize(const GameInstance& game) {
  if (game.node_count() > kOracleMaxNodes)
    throw LimitError("oracle needs n <= " + std::to_string(kOracleMaxNodes) +
                     ", got " + std::to_string(game.node_count()));
}

using Mask = unsigned long long;

int LowBit(Mask m) { return __builtin_ctzll(m); }

// x(S) for every mask.
std::vector<Rational> SubsetSums(const Allocation& x) {
  const Mask full = Mask{1} << x.size();
  std::vector<Rational> sums(full);
  for (Mask m = 1; m < full; ++m) {
    const int v = LowBit(m);
    sums[m] = sums[m ^ (Mask{1} << v)] + x[v];
  }
  return sums;
}

std::string CoalitionName(const GameInstance& game, Mask m) {
  std::string name = "S{";
  bool first = true;
  for (NodeId v = 0; v < game.node_count(); ++v) {
    if (!(m >> v & 1)) continue;
    if (!first) name += ',';
    name += game.label(v);
    first = false;
  }
  return name + "}";
}

bool Crossing(const Coalition& a, const Coalition& b) {
  return a.Intersects(b) && !a.IsSubsetOf(b) && !b.IsSubsetOf(a);
}

Coalition Meet(const Coalition& a, const Coalition& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return Coalition(std::move(out));
}

Coalition Join(const Coalition& a, const Coalition& b) {
  std::vector<NodeId> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(),
                 b.members().end(), std::back_inserter(out));
  return Coalition(std::move(out));
}

// Uncrosses pairs with odd intersection, which keeps y = 0. Returns false if
// a crossing pair with even intersection remains.
bool UncrossOddPairs(std::map<Coalition, Rational>& z) {
  for (int guard = 0; guard < 100000; ++guard) {
    bool even_left = false;
    std::optional<std::pair<Coalition, Coalition>> pair;
    for (auto a = z.begin(); a != z.end() && !pair; ++a) {
      for (auto b = std::next(a); b != z.end(); ++b) {
        if (!Crossing(a->first, b->first)) continue;
        if (Meet(a->first, b->first).size() % 2 == 0) {
          even_left = true;
        } else {
          pair.emplace(a->first, b->first);
          break;
        }
      }
    }
    if (!pair) return !even_left;
    const auto& [ka, kb] = *pair;
    const Coalition meet = Meet(ka, kb);
    const Rational alpha = std::min(z[ka], z[kb]);
    z[ka] -= alpha;
    z[kb] -= alpha;
    if (meet.size() >= 3) z[meet] += alpha;
    z[Join(ka, kb)] += alpha;
    std::erase_if(z, [](const auto& kv) { return kv.second.is_zero(); });
  }
  throw std::logic_error("odd uncrossing did not terminate");
}

}  // namespace

std::vector<Rational> AllCoalitionValues(const GameInstance& game) {
  CheckSize(game);
  const int n = game.node_count();
  const Mask full = Mask{1} << n;
  std::vector<Rational> nu(full);
  for (Mask m = 1; m < full; ++m) {
    const int v = LowBit(m);
    const Mask rest = m ^ (Mask{1} << v);
    Rational best = nu[rest];
    for (EdgeId e : game.incident(v)) {
      const Edge& ed = game.edge(e);
      const int u = ed.u == v ? ed.v : ed.u;
      if (!(rest >> u & 1)) continue;
      const Rational value = ed.w + nu[rest ^ (Mask{1} << u)];
      if (best < value) best = value;
    }
    nu[m] = best;
  }
  return nu;
}

NucleolusResult BruteNucleolus(const GameInstance& game, const SolverOptions& options) {
  CheckSize(game);
  const int n = game.node_count();
  const std::vector<Rational> nu = AllCoalitionValues(game);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<ChainItem> items;
  for (Mask m = 1; m < full; ++m) {
    LinearFunctional f;
    for (int v = 0; v < n; ++v) {
      if (m >> v & 1) f.Add(v, 1);
    }
    items.push_back({CoalitionName(game, m), std::move(f), nu[m]});
  }
  LinearFunctional total;
  for (int v = 0; v < n; ++v) total.Add(v, 1);
  std::vector<Constraint> base = {{total, Relation::kEqual, nu[full], "grand"}};
  return RunChain(StartChain(n, std::move(base), items, options), items,
                  NucleolusMethod::kBruteForce, options);
}

std::vector<Rational> ThetaVector(const std::vector<Rational>& values,
                                  const Allocation& x) {
  const std::vector<Rational> sums = SubsetSums(x);
  const Mask full = (Mask{1} << x.size()) - 1;
  std::vector<Rational> theta;
  theta.reserve(full > 0 ? full - 1 : 0);
  for (Mask m = 1; m < full; ++m) theta.push_back(sums[m] - values[m]);
  std::sort(theta.begin(), theta.end());
  return theta;
}

std::vector<Rational> ThetaVector(const GameInstance& game, const Allocation& x) {
  return ThetaVector(AllCoalitionValues(game), x);
}

std::strong_ordering ThetaCompare(const std::vector<Rational>& values,
                                  const Allocation& x, const Allocation& y) {
  const std::vector<Rational> a = ThetaVector(values, x);
  const std::vector<Rational> b = ThetaVector(values, y);
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

std::strong_ordering ThetaCompare(const GameInstance& game, const Allocation& x,
                                  const Allocation& y) {
  return ThetaCompare(AllCoalitionValues(game), x, y);
}

bool PrekernelCheck(const GameInstance& game, const Allocation& x) {
  const std::vector<Rational> nu = AllCoalitionValues(game);
  const std::vector<Rational> sums = SubsetSums(x);
  const int n = game.node_count();
  const Mask full = (Mask{1} << n) - 1;
  // Smallest excess over S with i in S, j not in S; its negation is the
  // surplus of i against j.
  std::vector<std::vector<std::optional<Rational>>> surplus(
      n, std::vector<std::optional<Rational>>(n));
  for (Mask m = 1; m < full; ++m) {
    const Rational ex = sums[m] - nu[m];
    for (int i = 0; i < n; ++i) {
      if (!(m >> i & 1)) continue;
      for (int j = 0; j < n; ++j) {
        if (m >> j & 1) continue;
        auto& s = surplus[i][j];
        if (!s || ex < *s) s = ex;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (surplus[i][j] != surplus[j][i]) return false;
    }
  }
  return true;
}

bool VerifyCardinalityLemma(const GameInstance& game, const Decomposition& dec,
                            const Allocation& x, const Matching& m) {
  const size_t k = dec.maximal_sets.size();
  auto owner = [&](EdgeId e) -> int {
    for (size_t i = 0; i < k; ++i) {
      const Coalition& s = dec.maximal_sets[i];
      if (s.contains(game.edge(e).u) && s.contains(game.edge(e).v))
        return static_cast<int>(i);
    }
    return -1;
  };
  std::vector<int> want(k, 0);
  for (EdgeId e : m.edges()) {
    const int i = owner(e);
    if (i < 0) throw std::invalid_argument("matching leaves the maximal sets");
    ++want[i];
  }
  const Rational bound = Excess(game, x, m);
  const std::vector<EdgeId>& star = dec.M_star.edges();
  for (Mask pick = 0; pick < (Mask{1} << star.size()); ++pick) {
    std::vector<int> have(k, 0);
    std::vector<EdgeId> chosen;
    for (size_t b = 0; b < star.size(); ++b) {
      if (!(pick >> b & 1)) continue;
      chosen.push_back(star[b]);
      ++have[owner(star[b])];
    }
    if (have != want) continue;
    if (Excess(game, x, Matching(std::move(chosen))) <= bound) return true;
  }
  return false;
}

CardinalityPolytopeReport VerifyRestrictedCardinality(const GameInstance& game,
                                                      const EdgeWeights& c, int t) {
  CheckSize(game);
  if (game.edge_count() > kExhaustiveEdgeLimit)
    throw LimitError("restricted cardinality check needs |E| <= " +
                     std::to_string(kExhaustiveEdgeLimit));
  const int n = game.node_count();
  const int m = game.edge_count();
  CardinalityPolytopeReport report;

  std::vector<Matching> all = EnumerateMatchings(game, kExhaustiveEdgeLimit);
  auto value = [&](const Matching& mm) {
    Rational s;
    for (EdgeId e : mm.edges()) s += c[e];
    return s;
  };
  std::optional<Rational> best_t, best_prev;
  for (const Matching& mm : all) {
    const Rational v = value(mm);
    if (mm.size() == t && (!best_t || *best_t < v)) best_t = v;
    if (mm.size() == t - 1 && (!best_prev || *best_prev < v)) best_prev = v;
  }
  report.feasible = best_t.has_value();
  if (!report.feasible) return report;
  report.best_matching = *best_t;

  std::vector<Coalition> odd;
  std::vector<std::vector<EdgeId>> inside;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const int size = __builtin_popcountll(s);
    if (size < 3 || size % 2 == 0) continue;
    const Coalition u = Coalition::FromMask(s);
    std::vector<EdgeId> es = EdgesInside(game, u);
    if (es.empty()) continue;
    odd.push_back(u);
    inside.push_back(std::move(es));
  }

  LpProblem primal;
  for (EdgeId e = 0; e < m; ++e) primal.AddVariable("x" + std::to_string(e));
  for (NodeId v = 0; v < n; ++v) {
    LinearFunctional deg;
    for (EdgeId e : game.incident(v)) deg.Add(e, 1);
    if (!deg.IsConstant()) primal.AddConstraint(deg, Relation::kLessEqual, 1);
  }
  for (size_t i = 0; i < odd.size(); ++i) {
    LinearFunctional f;
    for (EdgeId e : inside[i]) f.Add(e, 1);
    primal.AddConstraint(f, Relation::kLessEqual, (odd[i].size() - 1) / 2);
  }
  LinearFunctional total, objective;
  for (EdgeId e = 0; e < m; ++e) {
    total.Add(e, 1);
    objective.Add(e, c[e]);
  }
  primal.AddConstraint(total, Relation::kEqual, t);
  primal.SetObjective(Sense::kMaximize, objective);
  const LpSolution ps = SolveLp(primal);
  if (ps.status != LpStatus::kOptimal)
    throw std::logic_error("t-edge matching LP is not optimal");
  report.lp_value = ps.value;

  if (t < 2 || t > n / 2) return report;

  // Dual restricted to y = 0.
  LpProblem dual;
  std::vector<VarId> zvar;
  for (size_t i = 0; i < odd.size(); ++i) zvar.push_back(dual.AddVariable("z"));
  const VarId gamma = dual.AddVariable("gamma", false);
  for (EdgeId e = 0; e < m; ++e) {
    LinearFunctional row = LinearFunctional::Var(gamma);
    for (size_t i = 0; i < odd.size(); ++i) {
      if (odd[i].contains(game.edge(e).u) && odd[i].contains(game.edge(e).v))
        row.Add(zvar[i], 1);
    }
    dual.AddConstraint(row, Relation::kGreaterEqual, c[e]);
  }
  LinearFunctional dual_obj = LinearFunctional::Var(gamma, t);
  for (size_t i = 0; i < odd.size(); ++i)
    dual_obj.Add(zvar[i], Rational((odd[i].size() - 1) / 2));
  dual.SetObjective(Sense::kMinimize, dual_obj);
  const LpSolution ds = SolveLp(dual);
  if (ds.status != LpStatus::kOptimal || ds.value != ps.value) return report;
  std::map<Coalition, Rational> z;
  for (size_t i = 0; i < odd.size(); ++i) {
    if (ds.point[zvar[i]].sign() > 0) z[odd[i]] = ds.point[zvar[i]];
  }
  if (!UncrossOddPairs(z)) return report;
  report.dual_hypothesis = true;

  for (const Matching& mm : all) {
    if (mm.size() != t || value(mm) != *best_t) continue;
    bool found = false;
    for (EdgeId e : mm.edges()) {
      if (value(mm) - c[e] == *best_prev) {
        found = true;
        break;
      }
    }
    if (!found) report.removal_holds = false;
  }
  return report;
}

std::vector<Allocation> SampleLeastcoreVertices(const GameInstance& game,
                                                const Rational& epsilon1, int count,
                                                std::uint64_t seed,
                                                const SolverOptions& options) {
  LpProblem polytope = LeastcorePolytope(
      game, epsilon1, EnumerateMatchings(game, options.max_enum_edges));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-10, 10);
  std::vector<Allocation> out;
  for (int k = 0; k < count; ++k) {
    LinearFunctional objective;
    for (NodeId v = 0; v < game.node_count(); ++v) objective.Add(v, coeff(rng));
    polytope.SetObjective(Sense::kMaximize, objective);
    const LpSolution sol = SolveLp(polytope, options.lp);
    if (sol.status != LpStatus::kOptimal)
      throw InvariantError("leastcore polytope LP ended " +
                           std::string(ToString(sol.status)));
    if (std::find(out.begin(), out.end(), sol.point) == out.end())
      out.push_back(sol.point);
  }
  return out;
}

}  // namespace matchgame

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
#include <numeric>

#include "matchgame/lp.hpp"
#include "simplex.hpp"

namespace matchgame {
namespace {

// Rate at which a recession direction leaves the feasible side of c; negative
// means the ray eventually violates it.
Rational RayRate(const Constraint& c, const std::vector<Rational>& ray) {
  Rational rate;
  for (const auto& [v, coeff] : c.lhs.terms()) rate += coeff * ray[v];
  return c.rel == Relation::kLessEqual ? -rate : rate;
}

// Adds up to `batch` rows with the most negative score.
bool AddWorst(std::vector<std::pair<Rational, int>> scored, size_t batch,
              std::vector<char>& active, std::vector<int>& rows) {
  if (scored.empty()) return false;
  std::sort(scored.begin(), scored.end());
  for (size_t i = 0; i < scored.size() && i < batch; ++i) {
    active[scored[i].second] = 1;
    rows.push_back(scored[i].second);
  }
  return true;
}

}  // namespace

LpSolution SolveLp(const LpProblem& problem, const LpOptions& options) {
  const auto& all = problem.constraints();
  std::vector<int> rows;
  std::vector<char> active(all.size(), 0);
  size_t inequalities = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    if (all[i].rel == Relation::kEqual) {
      rows.push_back(static_cast<int>(i));
      active[i] = 1;
    } else {
      ++inequalities;
    }
  }
  if (inequalities <= options.row_generation_threshold) {
    std::vector<int> every(all.size());
    std::iota(every.begin(), every.end(), 0);
    return internal::SolveSubset(problem, every);
  }

  const size_t batch =
      std::max<size_t>(8, static_cast<size_t>(problem.variable_count()));
  while (true) {
    std::sort(rows.begin(), rows.end());
    LpSolution sol = internal::SolveSubset(problem, rows);
    if (sol.status == LpStatus::kInfeasible) return sol;

    std::vector<std::pair<Rational, int>> violated;
    if (sol.status == LpStatus::kUnbounded) {
      for (size_t i = 0; i < all.size(); ++i) {
        if (active[i]) continue;
        Rational rate = RayRate(all[i], sol.ray);
        if (rate.sign() < 0) violated.emplace_back(std::move(rate), static_cast<int>(i));
      }
      if (AddWorst(std::move(violated), batch, active, rows)) continue;
    }
    for (size_t i = 0; i < all.size(); ++i) {
      if (active[i]) continue;
      Rational slack = Slack(all[i], sol.point);
      if (slack.sign() < 0) violated.emplace_back(std::move(slack), static_cast<int>(i));
    }
    if (!AddWorst(std::move(violated), batch, active, rows)) return sol;
  }
}

LpSolution SolveWithGeneration(LpProblem& problem, const Separator& separator,
                               const LpOptions& options) {
  while (true) {
    LpSolution sol = SolveLp(problem, options);
    if (sol.status != LpStatus::kOptimal) return sol;
    std::optional<Constraint> cut = separator(sol.point);
    if (!cut) return sol;
    if (Satisfied(*cut, sol.point)) {
      throw std::logic_error("separator returned a constraint that holds at " +
                             std::string("the queried point: ") + cut->name);
    }
    problem.AddConstraint(std::move(*cut));
  }
}

FixedResult IsFunctionalFixed(const LpProblem& region, const LinearFunctional& f,
                              const LpOptions& options) {
  LpProblem p = region;
  p.SetObjective(Sense::kMaximize, f);
  const LpSolution hi = SolveLp(p, options);
  if (hi.status == LpStatus::kInfeasible)
    throw InfeasibleError("fixedness test on an empty region");
  if (hi.status == LpStatus::kUnbounded) return {};
  p.SetObjective(Sense::kMinimize, f);
  const LpSolution lo = SolveLp(p, options);
  if (lo.status != LpStatus::kOptimal) return {};
  if (hi.value != lo.value) return {};
  return FixedResult{true, hi.value};
}

}  // namespace matchgame

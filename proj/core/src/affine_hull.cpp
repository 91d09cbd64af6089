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

#include <stdexcept>

#include "matchgame/lp.hpp"

namespace matchgame {
namespace {

// An inequality tight at the base point, written as a.x >= b.
struct Candidate {
  bool is_bound;  // sign restriction on variable `index`
  int index;
  std::vector<Rational> normal;
};

}  // namespace

AffineHull AffineHull::Compute(const LpProblem& region, const LpOptions& options) {
  const int n = region.variable_count();
  AffineHull hull(n);

  LpProblem feasibility = region;
  feasibility.SetObjective(Sense::kMaximize, LinearFunctional());
  const LpSolution base = SolveLp(feasibility, options);
  if (base.status != LpStatus::kOptimal)
    throw InfeasibleError("affine hull of an empty region");
  hull.point_ = base.point;

  const auto& rows = region.constraints();
  hull.implicit_rows_.assign(rows.size(), false);
  hull.implicit_bounds_.assign(n, false);

  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rel != Relation::kEqual) continue;
    hull.implicit_rows_[i] = true;
    hull.span_.Insert(rows[i].lhs.Dense(n));
  }

  std::vector<Candidate> open;
  auto consider = [&](Candidate c) {
    if (hull.span_.Contains(c.normal)) {
      (c.is_bound ? hull.implicit_bounds_ : hull.implicit_rows_)[c.index] = true;
    } else {
      open.push_back(std::move(c));
    }
  };
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rel == Relation::kEqual) continue;
    if (!Slack(rows[i], hull.point_).is_zero()) continue;
    std::vector<Rational> normal = rows[i].lhs.Dense(n);
    if (rows[i].rel == Relation::kLessEqual) {
      for (Rational& c : normal) c = -c;
    }
    consider({false, static_cast<int>(i), std::move(normal)});
  }
  for (VarId v = 0; v < n; ++v) {
    if (!region.nonneg(v) || !hull.point_[v].is_zero()) continue;
    std::vector<Rational> normal(n);
    normal[v] = 1;
    consider({true, v, std::move(normal)});
  }

  // A tight inequality is an implicit equality iff its normal has a positive
  // weight in some vanishing combination of tight normals and equality rows.
  while (!open.empty()) {
    LpProblem support;
    std::vector<VarId> y;
    for (size_t i = 0; i < open.size(); ++i) y.push_back(support.AddVariable("y"));
    std::vector<VarId> mu;
    for (int k = 0; k < hull.span_.rank(); ++k)
      mu.push_back(support.AddVariable("mu", false));
    for (int j = 0; j < n; ++j) {
      LinearFunctional row;
      for (size_t i = 0; i < open.size(); ++i) row.Add(y[i], open[i].normal[j]);
      for (int k = 0; k < hull.span_.rank(); ++k)
        row.Add(mu[k], hull.span_.basis()[k][j]);
      if (!row.IsConstant()) support.AddConstraint(row, Relation::kEqual, 0);
    }
    LinearFunctional total;
    for (VarId v : y) total.Add(v, 1);
    support.AddConstraint(total, Relation::kLessEqual, 1);
    support.SetObjective(Sense::kMaximize, total);
    const LpSolution sol = SolveLp(support, options);
    if (sol.status != LpStatus::kOptimal)
      throw std::logic_error("implicit-equality support LP not optimal");
    if (sol.value.is_zero()) break;

    std::vector<Candidate> rest;
    for (size_t i = 0; i < open.size(); ++i) {
      if (sol.point[y[i]].sign() > 0) {
        (open[i].is_bound ? hull.implicit_bounds_ : hull.implicit_rows_)[open[i].index] =
            true;
        hull.span_.Insert(open[i].normal);
      } else {
        rest.push_back(std::move(open[i]));
      }
    }
    open.clear();
    for (Candidate& c : rest) consider(std::move(c));
  }
  return hull;
}

bool AffineHull::IsConstant(const LinearFunctional& f) const {
  return span_.Contains(f.Dense(span_.dimension()));
}

std::vector<Rational> RelativeInteriorPoint(const LpProblem& region,
                                            const LpOptions& options) {
  const AffineHull hull = AffineHull::Compute(region, options);
  const int n = region.variable_count();
  LpProblem p;
  for (VarId v = 0; v < n; ++v) p.AddVariable(region.name(v), region.nonneg(v));
  const VarId delta = p.AddVariable("delta");
  bool any_strict = false;
  const auto& rows = region.constraints();
  for (size_t i = 0; i < rows.size(); ++i) {
    const Constraint& c = rows[i];
    if (hull.implicit_rows()[i]) {
      p.AddConstraint(c.lhs, Relation::kEqual, c.rhs, c.name);
      continue;
    }
    any_strict = true;
    LinearFunctional lhs = c.lhs;
    lhs.Add(delta, c.rel == Relation::kGreaterEqual ? -1 : 1);
    p.AddConstraint(std::move(lhs), c.rel, c.rhs, c.name);
  }
  for (VarId v = 0; v < n; ++v) {
    if (!region.nonneg(v)) continue;
    if (hull.implicit_bounds()[v]) {
      p.AddConstraint(LinearFunctional::Var(v), Relation::kEqual, 0);
    } else {
      any_strict = true;
      p.AddConstraint(LinearFunctional::Var(v) - LinearFunctional::Var(delta),
                      Relation::kGreaterEqual, 0);
    }
  }
  if (!any_strict) return hull.point();
  p.AddConstraint(LinearFunctional::Var(delta), Relation::kLessEqual, 1);
  p.SetObjective(Sense::kMaximize, LinearFunctional::Var(delta));
  const LpSolution sol = SolveLp(p, options);
  if (sol.status != LpStatus::kOptimal || sol.value.sign() <= 0)
    throw std::logic_error("relative interior LP found no strict slack");
  return std::vector<Rational>(sol.point.begin(), sol.point.begin() + n);
}

}  // namespace matchgame

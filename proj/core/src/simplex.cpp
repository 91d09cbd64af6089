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

#include "simplex.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace matchgame::internal {
namespace {

enum class Outcome { kOptimal, kUnbounded };

// Dense tableau for min c.x, Ax = b, x >= 0 with b >= 0.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : a_(rows, std::vector<mpq_class>(cols)), b_(rows), basis_(rows, -1),
        cols_(cols) {}

  mpq_class& at(int r, int c) { return a_[r][c]; }
  mpq_class& rhs(int r) { return b_[r]; }
  int& basis(int r) { return basis_[r]; }
  int rows() const { return static_cast<int>(a_.size()); }
  int cols() const { return cols_; }

  void RemoveRow(int r) {
    a_.erase(a_.begin() + r);
    b_.erase(b_.begin() + r);
    basis_.erase(basis_.begin() + r);
  }

  void Pivot(int r, int e, std::vector<mpq_class>* reduced) {
    const mpq_class piv = a_[r][e];
    std::vector<int> nz;
    for (int k = 0; k < cols_; ++k) {
      if (sgn(a_[r][k]) != 0) {
        a_[r][k] /= piv;
        nz.push_back(k);
      }
    }
    b_[r] /= piv;
    for (int i = 0; i < rows(); ++i) {
      if (i == r || sgn(a_[i][e]) == 0) continue;
      const mpq_class f = a_[i][e];
      for (int k : nz) a_[i][k] -= f * a_[r][k];
      b_[i] -= f * b_[r];
    }
    if (reduced && sgn((*reduced)[e]) != 0) {
      const mpq_class f = (*reduced)[e];
      for (int k : nz) (*reduced)[k] -= f * a_[r][k];
    }
    basis_[r] = e;
  }

  // Bland's rule on columns where allowed[c] is set. On unbounded exit,
  // *entering holds the column with no ratio-test row.
  Outcome Run(const std::vector<mpq_class>& cost, const std::vector<char>& allowed,
              int* entering) {
    std::vector<mpq_class> reduced = cost;
    for (int i = 0; i < rows(); ++i) {
      const mpq_class cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int k = 0; k < cols_; ++k) {
        if (sgn(a_[i][k]) != 0) reduced[k] -= cb * a_[i][k];
      }
    }
    while (true) {
      int e = -1;
      for (int k = 0; k < cols_; ++k) {
        if (allowed[k] && sgn(reduced[k]) < 0) {
          e = k;
          break;
        }
      }
      if (e < 0) return Outcome::kOptimal;
      int leave = -1;
      mpq_class best;
      for (int i = 0; i < rows(); ++i) {
        if (sgn(a_[i][e]) <= 0) continue;
        mpq_class ratio = b_[i] / a_[i][e];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) {
        *entering = e;
        return Outcome::kUnbounded;
      }
      Pivot(leave, e, &reduced);
    }
  }

 private:
  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> b_;
  std::vector<int> basis_;
  int cols_;
};

}  // namespace

LpSolution SolveSubset(const LpProblem& problem, const std::vector<int>& rows) {
  const int n = problem.variable_count();
  // Structural columns: x_v for nonnegative v, x_v+ and x_v- for free v.
  std::vector<int> pos_col(n), neg_col(n, -1);
  int cols = 0;
  for (VarId v = 0; v < n; ++v) {
    pos_col[v] = cols++;
    if (!problem.nonneg(v)) neg_col[v] = cols++;
  }

  struct Row {
    std::vector<std::pair<int, mpq_class>> coeffs;
    Relation rel;
    mpq_class rhs;
  };
  std::vector<Row> std_rows;
  for (int idx : rows) {
    const Constraint& c = problem.constraints()[idx];
    Row row;
    row.rel = c.rel;
    row.rhs = (c.rhs - c.lhs.constant()).mpq();
    for (const auto& [v, coeff] : c.lhs.terms()) {
      row.coeffs.emplace_back(pos_col[v], coeff.mpq());
      if (neg_col[v] >= 0) row.coeffs.emplace_back(neg_col[v], -coeff.mpq());
    }
    if (row.coeffs.empty()) {
      const int s = sgn(row.rhs);
      const bool ok = (c.rel == Relation::kEqual && s == 0) ||
                      (c.rel == Relation::kGreaterEqual && s <= 0) ||
                      (c.rel == Relation::kLessEqual && s >= 0);
      if (!ok) return LpSolution{LpStatus::kInfeasible, {}, {}, {}};
      continue;
    }
    if (sgn(row.rhs) < 0) {
      row.rhs = -row.rhs;
      for (auto& [col, coeff] : row.coeffs) coeff = -coeff;
      if (row.rel == Relation::kLessEqual) {
        row.rel = Relation::kGreaterEqual;
      } else if (row.rel == Relation::kGreaterEqual) {
        row.rel = Relation::kLessEqual;
      }
    }
    std_rows.push_back(std::move(row));
  }

  const int m = static_cast<int>(std_rows.size());
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  for (int i = 0; i < m; ++i) {
    if (std_rows[i].rel != Relation::kEqual) slack_col[i] = cols++;
  }
  const int first_art = cols;
  for (int i = 0; i < m; ++i) {
    if (std_rows[i].rel != Relation::kLessEqual) art_col[i] = cols++;
  }

  Tableau t(m, cols);
  for (int i = 0; i < m; ++i) {
    for (const auto& [col, coeff] : std_rows[i].coeffs) t.at(i, col) += coeff;
    t.rhs(i) = std_rows[i].rhs;
    if (slack_col[i] >= 0)
      t.at(i, slack_col[i]) = std_rows[i].rel == Relation::kLessEqual ? 1 : -1;
    if (art_col[i] >= 0) {
      t.at(i, art_col[i]) = 1;
      t.basis(i) = art_col[i];
    } else {
      t.basis(i) = slack_col[i];
    }
  }

  int entering = -1;
  if (first_art < cols) {
    std::vector<mpq_class> cost(cols);
    for (int k = first_art; k < cols; ++k) cost[k] = 1;
    std::vector<char> allowed(cols, 1);
    t.Run(cost, allowed, &entering);
    mpq_class infeasibility;
    for (int i = 0; i < t.rows(); ++i) {
      if (t.basis(i) >= first_art) infeasibility += t.rhs(i);
    }
    if (sgn(infeasibility) != 0) return LpSolution{LpStatus::kInfeasible, {}, {}, {}};
    // Drive zero-level artificials out of the basis or drop redundant rows.
    for (int i = t.rows() - 1; i >= 0; --i) {
      if (t.basis(i) < first_art) continue;
      int col = -1;
      for (int k = 0; k < first_art; ++k) {
        if (sgn(t.at(i, k)) != 0) {
          col = k;
          break;
        }
      }
      if (col < 0) {
        t.RemoveRow(i);
      } else {
        t.Pivot(i, col, nullptr);
      }
    }
  }

  std::vector<mpq_class> cost(cols);
  const bool maximize = problem.sense() == Sense::kMaximize;
  for (const auto& [v, coeff] : problem.objective().terms()) {
    const mpq_class c = maximize ? mpq_class(-coeff.mpq()) : coeff.mpq();
    cost[pos_col[v]] += c;
    if (neg_col[v] >= 0) cost[neg_col[v]] -= c;
  }
  std::vector<char> allowed(cols, 0);
  for (int k = 0; k < first_art; ++k) allowed[k] = 1;
  const Outcome outcome = t.Run(cost, allowed, &entering);

  std::vector<mpq_class> x(cols);
  for (int i = 0; i < t.rows(); ++i) x[t.basis(i)] = t.rhs(i);
  auto to_original = [&](const std::vector<mpq_class>& cols_value) {
    std::vector<Rational> out(n);
    for (VarId v = 0; v < n; ++v) {
      mpq_class value = cols_value[pos_col[v]];
      if (neg_col[v] >= 0) value -= cols_value[neg_col[v]];
      out[v] = Rational(value);
    }
    return out;
  };

  LpSolution sol;
  sol.point = to_original(x);
  sol.value = problem.objective().Evaluate(sol.point);
  if (outcome == Outcome::kUnbounded) {
    std::vector<mpq_class> ray(cols);
    ray[entering] = 1;
    for (int i = 0; i < t.rows(); ++i) ray[t.basis(i)] = -t.at(i, entering);
    sol.status = LpStatus::kUnbounded;
    sol.ray = to_original(ray);
  } else {
    sol.status = LpStatus::kOptimal;
  }
  return sol;
}

}  // namespace matchgame::internal

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

#ifndef MATCHGAME_LP_HPP_
#define MATCHGAME_LP_HPP_

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchgame/rational.hpp"
#include "matchgame/row_space.hpp"

namespace matchgame {

using VarId = int;

// Sparse affine form sum_v coeff_v * x_v + constant. Zero coefficients are
// never stored.
class LinearFunctional {
 public:
  LinearFunctional() = default;
  explicit LinearFunctional(Rational constant) : constant_(std::move(constant)) {}

  static LinearFunctional Var(VarId v, const Rational& coeff = 1);

  LinearFunctional& Add(VarId v, const Rational& coeff);
  LinearFunctional& AddConstant(const Rational& c);

  const std::map<VarId, Rational>& terms() const { return terms_; }
  const Rational& constant() const { return constant_; }
  Rational coeff(VarId v) const;
  bool IsConstant() const { return terms_.empty(); }

  Rational Evaluate(const std::vector<Rational>& point) const;
  // Dense linear part of length n (constant dropped).
  std::vector<Rational> Dense(int n) const;

  LinearFunctional& operator+=(const LinearFunctional& other);
  LinearFunctional& operator-=(const LinearFunctional& other);
  LinearFunctional& operator*=(const Rational& s);
  friend LinearFunctional operator+(LinearFunctional a, const LinearFunctional& b) {
    return a += b;
  }
  friend LinearFunctional operator-(LinearFunctional a, const LinearFunctional& b) {
    return a -= b;
  }
  friend LinearFunctional operator*(LinearFunctional a, const Rational& s) {
    return a *= s;
  }
  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

 private:
  std::map<VarId, Rational> terms_;
  Rational constant_;
};

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

// lhs rel rhs, where lhs may carry its own constant.
struct Constraint {
  LinearFunctional lhs;
  Relation rel = Relation::kGreaterEqual;
  Rational rhs;
  std::string name;
};

// Signed slack: lhs - rhs for >=, rhs - lhs for <=, -|lhs - rhs| for =.
// Nonnegative exactly when the constraint holds.
Rational Slack(const Constraint& c, const std::vector<Rational>& point);
inline bool Satisfied(const Constraint& c, const std::vector<Rational>& point) {
  return Slack(c, point).sign() >= 0;
}

enum class Sense { kMaximize, kMinimize };

class LpProblem {
 public:
  VarId AddVariable(std::string name, bool nonneg = true);
  void AddConstraint(Constraint c);
  void AddConstraint(LinearFunctional lhs, Relation rel, Rational rhs,
                     std::string name = {});
  void SetObjective(Sense sense, LinearFunctional objective);

  int variable_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(VarId v) const { return names_[v]; }
  bool nonneg(VarId v) const { return nonneg_[v]; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  Sense sense() const { return sense_; }
  const LinearFunctional& objective() const { return objective_; }

  // True when every constraint and sign restriction holds at the point.
  bool IsFeasible(const std::vector<Rational>& point) const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> nonneg_;
  std::vector<Constraint> constraints_;
  Sense sense_ = Sense::kMaximize;
  LinearFunctional objective_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> point;  // feasible point, also set when unbounded
  Rational value;
  std::vector<Rational> ray;  // improving recession direction when unbounded
};

struct LpOptions {
  // Explicit problems with more non-equality rows than this are solved by
  // adding violated rows to a working subset.
  size_t row_generation_threshold = 48;
};

// Two-phase primal simplex with Bland's rule, exact arithmetic throughout.
LpSolution SolveLp(const LpProblem& problem, const LpOptions& options = {});

// Returns a constraint violated at the point, or nothing when the point
// satisfies the whole implicit family.
using Separator =
    std::function<std::optional<Constraint>(const std::vector<Rational>&)>;

// Cutting-plane loop. Generated rows are appended to `problem`. The explicit
// part of the problem must keep the LP bounded. Throws std::logic_error when
// the separator returns a row that the queried point satisfies.
LpSolution SolveWithGeneration(LpProblem& problem, const Separator& separator,
                               const LpOptions& options = {});

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixedResult {
  bool fixed = false;
  std::optional<Rational> value;
};

// Max/min pair of f over the feasible region of `region` (objective ignored).
FixedResult IsFunctionalFixed(const LpProblem& region, const LinearFunctional& f,
                              const LpOptions& options = {});

// Affine hull of the feasible region: explicit equalities plus every implicit
// equality among the inequalities and sign restrictions.
class AffineHull {
 public:
  // Throws InfeasibleError.
  static AffineHull Compute(const LpProblem& region, const LpOptions& options = {});

  bool IsConstant(const LinearFunctional& f) const;
  // f at the base point; meaningful when IsConstant(f).
  Rational ValueOf(const LinearFunctional& f) const { return f.Evaluate(point_); }

  const std::vector<Rational>& point() const { return point_; }
  // Per constraint of the region: implicit equality or explicit equality.
  const std::vector<bool>& implicit_rows() const { return implicit_rows_; }
  // Per variable: the sign restriction x_v >= 0 holds with equality.
  const std::vector<bool>& implicit_bounds() const { return implicit_bounds_; }
  int dimension() const { return span_.dimension() - span_.rank(); }
  // Basis of the linear parts of all equalities; each is constant on the region.
  const std::vector<std::vector<Rational>>& equations() const { return span_.basis(); }

 private:
  explicit AffineHull(int n) : span_(n) {}

  std::vector<Rational> point_;
  std::vector<bool> implicit_rows_;
  std::vector<bool> implicit_bounds_;
  RowSpace span_;
};

// A point on which every non-implicit inequality has strictly positive slack.
// Throws InfeasibleError.
std::vector<Rational> RelativeInteriorPoint(const LpProblem& region,
                                            const LpOptions& options = {});

// CPLEX-like text dump; rationals printed as p/q.
void WriteLpText(std::ostream& out, const LpProblem& problem,
                 const std::string& title = {});

}  // namespace matchgame

#endif  // MATCHGAME_LP_HPP_

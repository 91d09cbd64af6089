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

#include "matchgame/lp.hpp"

namespace matchgame {

LinearFunctional LinearFunctional::Var(VarId v, const Rational& coeff) {
  LinearFunctional f;
  f.Add(v, coeff);
  return f;
}

LinearFunctional& LinearFunctional::Add(VarId v, const Rational& coeff) {
  if (coeff.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(v, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

LinearFunctional& LinearFunctional::AddConstant(const Rational& c) {
  constant_ += c;
  return *this;
}

Rational LinearFunctional::coeff(VarId v) const {
  const auto it = terms_.find(v);
  return it == terms_.end() ? Rational() : it->second;
}

Rational LinearFunctional::Evaluate(const std::vector<Rational>& point) const {
  Rational total = constant_;
  for (const auto& [v, c] : terms_) total += c * point.at(v);
  return total;
}

std::vector<Rational> LinearFunctional::Dense(int n) const {
  std::vector<Rational> out(n);
  for (const auto& [v, c] : terms_) out.at(v) = c;
  return out;
}

LinearFunctional& LinearFunctional::operator+=(const LinearFunctional& other) {
  for (const auto& [v, c] : other.terms_) Add(v, c);
  constant_ += other.constant_;
  return *this;
}

LinearFunctional& LinearFunctional::operator-=(const LinearFunctional& other) {
  for (const auto& [v, c] : other.terms_) Add(v, -c);
  constant_ -= other.constant_;
  return *this;
}

LinearFunctional& LinearFunctional::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    constant_ = 0;
    return *this;
  }
  for (auto& [v, c] : terms_) c *= s;
  constant_ *= s;
  return *this;
}

Rational Slack(const Constraint& c, const std::vector<Rational>& point) {
  const Rational diff = c.lhs.Evaluate(point) - c.rhs;
  switch (c.rel) {
    case Relation::kGreaterEqual:
      return diff;
    case Relation::kLessEqual:
      return -diff;
    case Relation::kEqual:
      return -Abs(diff);
  }
  return diff;
}

VarId LpProblem::AddVariable(std::string name, bool nonneg) {
  names_.push_back(std::move(name));
  nonneg_.push_back(nonneg);
  return variable_count() - 1;
}

void LpProblem::AddConstraint(Constraint c) {
  for (const auto& [v, coeff] : c.lhs.terms()) {
    if (v < 0 || v >= variable_count())
      throw std::invalid_argument("constraint references undeclared variable");
  }
  constraints_.push_back(std::move(c));
}

void LpProblem::AddConstraint(LinearFunctional lhs, Relation rel, Rational rhs,
                              std::string name) {
  AddConstraint(Constraint{std::move(lhs), rel, std::move(rhs), std::move(name)});
}

void LpProblem::SetObjective(Sense sense, LinearFunctional objective) {
  for (const auto& [v, coeff] : objective.terms()) {
    if (v < 0 || v >= variable_count())
      throw std::invalid_argument("objective references undeclared variable");
  }
  sense_ = sense;
  objective_ = std::move(objective);
}

bool LpProblem::IsFeasible(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != variable_count()) return false;
  for (VarId v = 0; v < variable_count(); ++v) {
    if (nonneg_[v] && point[v].sign() < 0) return false;
  }
  for (const Constraint& c : constraints_) {
    if (!Satisfied(c, point)) return false;
  }
  return true;
}

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

}  // namespace matchgame

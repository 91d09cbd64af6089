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

#include <ostream>

#include "matchgame/lp.hpp"

namespace matchgame {
namespace {

void WriteTerms(std::ostream& out, const LpProblem& p, const LinearFunctional& f) {
  bool first = true;
  for (const auto& [v, c] : f.terms()) {
    if (c.sign() < 0) {
      out << (first ? "-" : " - ");
    } else if (!first) {
      out << " + ";
    }
    const Rational mag = Abs(c);
    if (mag != 1) out << mag << ' ';
    out << p.name(v);
    first = false;
  }
  if (!f.constant().is_zero() || first) {
    if (first) {
      out << f.constant();
    } else {
      out << (f.constant().sign() < 0 ? " - " : " + ") << Abs(f.constant());
    }
  }
}

const char* RelText(Relation rel) {
  switch (rel) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "?";
}

}  // namespace

void WriteLpText(std::ostream& out, const LpProblem& problem,
                 const std::string& title) {
  if (!title.empty()) out << "\\ " << title << '\n';
  out << (problem.sense() == Sense::kMaximize ? "Maximize" : "Minimize") << '\n';
  out << " obj: ";
  WriteTerms(out, problem, problem.objective());
  out << "\nSubject To\n";
  int index = 0;
  for (const Constraint& c : problem.constraints()) {
    out << ' ' << (c.name.empty() ? "c" + std::to_string(index) : c.name) << ": ";
    WriteTerms(out, problem, c.lhs);
    out << ' ' << RelText(c.rel) << ' ' << c.rhs << '\n';
    ++index;
  }
  bool any_free = false;
  for (VarId v = 0; v < problem.variable_count(); ++v) any_free |= !problem.nonneg(v);
  if (any_free) {
    out << "Bounds\n";
    for (VarId v = 0; v < problem.variable_count(); ++v) {
      if (!problem.nonneg(v)) out << ' ' << problem.name(v) << " free\n";
    }
  }
  out << "End\n";
}

}  // namespace matchgame

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

#ifndef MATCHGAME_OPTIONS_HPP_
#define MATCHGAME_OPTIONS_HPP_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include "matchgame/lp.hpp"

namespace matchgame {

// A size bound (enumeration, oracle node count) was exceeded.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural property that must hold by construction did not. Signals a
// bug or bad input passed through an unchecked path.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SolverOptions {
  // Upper bound on |E| for anything that enumerates matchings.
  size_t max_enum_edges = 24;
  LpOptions lp;
  // Called with every LP that a pipeline stage solves, before solving.
  std::function<void(const std::string& label, const LpProblem& problem)>
      lp_observer;

  void Observe(const std::string& label, const LpProblem& problem) const {
    if (lp_observer) lp_observer(label, problem);
  }
};

}  // namespace matchgame

#endif  // MATCHGAME_OPTIONS_HPP_

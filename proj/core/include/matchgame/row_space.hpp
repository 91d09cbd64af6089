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

#ifndef MATCHGAME_ROW_SPACE_HPP_
#define MATCHGAME_ROW_SPACE_HPP_

#include <vector>

#include "matchgame/rational.hpp"

namespace matchgame {

// Span of a set of rational row vectors, kept in reduced row echelon form.
class RowSpace {
 public:
  explicit RowSpace(int dimension) : dimension_(dimension) {}

  int dimension() const { return dimension_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rational>>& basis() const { return rows_; }

  // Residual of v after eliminating every pivot column.
  std::vector<Rational> Reduce(std::vector<Rational> v) const;
  bool Contains(const std::vector<Rational>& v) const;
  // Returns false when v was already in the span.
  bool Insert(std::vector<Rational> v);

 private:
  int dimension_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

}  // namespace matchgame

#endif  // MATCHGAME_ROW_SPACE_HPP_

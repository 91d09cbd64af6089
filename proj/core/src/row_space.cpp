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

#include "matchgame/row_space.hpp"

#include <stdexcept>

namespace matchgame {

std::vector<Rational> RowSpace::Reduce(std::vector<Rational> v) const {
  if (static_cast<int>(v.size()) != dimension_)
    throw std::invalid_argument("row dimension mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (v[p].is_zero()) continue;
    const Rational factor = v[p];
    for (int j = 0; j < dimension_; ++j) {
      if (!rows_[r][j].is_zero()) v[j] -= factor * rows_[r][j];
    }
  }
  return v;
}

bool RowSpace::Contains(const std::vector<Rational>& v) const {
  for (const Rational& c : Reduce(v)) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool RowSpace::Insert(std::vector<Rational> v) {
  v = Reduce(std::move(v));
  int pivot = -1;
  for (int j = 0; j < dimension_; ++j) {
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  const Rational scale = v[pivot];
  for (Rational& c : v) {
    if (!c.is_zero()) c /= scale;
  }
  for (auto& row : rows_) {
    if (row[pivot].is_zero()) continue;
    const Rational factor = row[pivot];
    for (int j = 0; j < dimension_; ++j) {
      if (!v[j].is_zero()) row[j] -= factor * v[j];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace matchgame

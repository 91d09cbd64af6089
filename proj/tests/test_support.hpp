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

#ifndef MATCHGAME_TESTS_TEST_SUPPORT_HPP_
#define MATCHGAME_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "matchgame/game.hpp"
#include "matchgame/matching.hpp"
#include "matchgame/oracle.hpp"
#include "matchgame/random_game.hpp"
#include "matchgame/rational.hpp"

namespace matchgame::testing {

inline Rational Q(const char* text) { return *Rational::Parse(text); }

inline Allocation Alloc(std::initializer_list<const char*> values) {
  Allocation x;
  for (const char* v : values) x.push_back(Q(v));
  return x;
}

// Edges given with 1-based endpoints.
inline GameInstance Graph(int n, std::initializer_list<std::tuple<int, int, int>> edges) {
  std::vector<Edge> list;
  for (auto [u, v, w] : edges) list.push_back({u - 1, v - 1, Rational(w)});
  return GameInstance::WithDefaultLabels(n, std::move(list));
}

inline GameInstance FiveCycle() {
  return Graph(5, {{1, 2, 2}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {1, 5, 2}});
}
inline Allocation FiveCycleNucleolus() { return Alloc({"7/5", "2/5", "2/5", "2/5", "2/5"}); }

inline GameInstance K2() { return Graph(2, {{1, 2, 1}}); }
inline GameInstance Triangle() { return Graph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}); }
inline GameInstance TwoTriangles() {
  return Graph(6, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}, {4, 5, 1}, {5, 6, 1}, {4, 6, 1}});
}
inline GameInstance Path3() { return Graph(3, {{1, 2, 1}, {2, 3, 1}}); }
inline GameInstance FourCycle() {
  return Graph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {1, 4, 1}});
}

inline EdgeId EdgeOf(const GameInstance& g, int u, int v) { return *g.FindEdge(u - 1, v - 1); }

inline Matching MatchingOf(const GameInstance& g,
                           std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<EdgeId> ids;
  for (auto [u, v] : pairs) ids.push_back(EdgeOf(g, u, v));
  return Matching::FromEdges(g, std::move(ids));
}

// Exhaustive nu(S) straight from the matching list, independent of the
// bitmask recursion in the oracle.
inline Rational EnumeratedValue(const GameInstance& g, const Coalition& s) {
  Rational best;
  for (const Matching& m : EnumerateMatchings(g)) {
    if (!CoveredNodes(g, m).IsSubsetOf(s)) continue;
    const Rational w = MatchingWeight(g, m);
    if (best < w) best = w;
  }
  return best;
}

inline std::string Seeded(const char* what, std::uint64_t seed) {
  return std::string(what) + " seed " + std::to_string(seed);
}

}  // namespace matchgame::testing

#endif  // MATCHGAME_TESTS_TEST_SUPPORT_HPP_

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

#ifndef MATCHGAME_GAME_HPP_
#define MATCHGAME_GAME_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchgame/rational.hpp"

namespace matchgame {

using NodeId = int;
using EdgeId = int;

// Raised for malformed instances and unreadable input. The kind lets callers
// tell the failure classes apart without parsing messages.
class GameError : public std::runtime_error {
 public:
  enum class Kind {
    kSyntax,
    kDuplicateEdge,
    kSelfLoop,
    kNegativeWeight,
    kBadNode,
    kIo,
  };

  GameError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Rational w;
};

// Undirected simple graph with nonnegative rational weights. Edges are stored
// with u < v and sorted lexicographically, so edge ids are canonical.
class GameInstance {
 public:
  GameInstance() = default;
  GameInstance(std::vector<std::string> labels, std::vector<Edge> edges);

  // Labels default to "1".."n".
  static GameInstance WithDefaultLabels(int node_count, std::vector<Edge> edges);

  int node_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<EdgeId>& incident(NodeId v) const { return incident_[v]; }

  std::optional<EdgeId> FindEdge(NodeId a, NodeId b) const;

  // Induced subgraph on `nodes` (sorted ascending); node i of the result is
  // nodes[i]. `edge_map`, if given, receives the original id of each edge.
  GameInstance Induced(const std::vector<NodeId>& nodes,
                       std::vector<EdgeId>* edge_map = nullptr) const;

  friend bool operator==(const GameInstance& a, const GameInstance& b);

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// A set of pairwise disjoint edges, kept sorted by id.
class Matching {
 public:
  Matching() = default;
  // Sorts; disjointness is the caller's responsibility.
  explicit Matching(std::vector<EdgeId> edges);

  // Throws std::invalid_argument if the edges overlap or are out of range.
  static Matching FromEdges(const GameInstance& game, std::vector<EdgeId> edges);

  const std::vector<EdgeId>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  bool contains(EdgeId e) const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<EdgeId> edges_;
};

// Sorted, duplicate-free node set.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(std::vector<NodeId> members);

  static Coalition All(int node_count);
  static Coalition FromMask(unsigned long long mask);

  const std::vector<NodeId>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(NodeId v) const;
  bool IsSubsetOf(const Coalition& other) const;
  bool Intersects(const Coalition& other) const;
  unsigned long long Mask() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition&, const Coalition&) = default;

 private:
  std::vector<NodeId> members_;
};

using Allocation = std::vector<Rational>;

Rational MatchingWeight(const GameInstance& game, const Matching& m);
Coalition CoveredNodes(const GameInstance& game, const Matching& m);
Rational SumOver(const Allocation& x, const Coalition& s);
// x(u) + x(v) for e = uv.
Rational EdgeSum(const GameInstance& game, const Allocation& x, EdgeId e);

// x(V(M)) - w(M).
Rational Excess(const GameInstance& game, const Allocation& x, const Matching& m);
Rational CoalitionExcess(const Allocation& x, const Coalition& s,
                         const Rational& nu_s);
// x(S) - x*(S).
Rational Sym(const Allocation& x, const Allocation& x_star, const Coalition& s);

// Edges with both endpoints in s.
std::vector<EdgeId> EdgesInside(const GameInstance& game, const Coalition& s);

std::string FormatAllocation(const GameInstance& game, const Allocation& x);

}  // namespace matchgame

#endif  // MATCHGAME_GAME_HPP_

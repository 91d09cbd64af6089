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

#include "matchgame/game.hpp"

#include <algorithm>
#include <sstream>

namespace matchgame {

GameInstance::GameInstance(std::vector<std::string> labels,
                           std::vector<Edge> edges)
    : labels_(std::move(labels)) {
  const int n = node_count();
  if (n <= 0) throw GameError(GameError::Kind::kBadNode, "game has no nodes");
  {
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw GameError(GameError::Kind::kBadNode, "duplicate node label");
  }
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GameError(GameError::Kind::kBadNode,
                      "edge endpoint out of range: " + std::to_string(e.u) +
                          " " + std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw GameError(GameError::Kind::kSelfLoop,
                      "self-loop at node " + labels_[e.u]);
    }
    if (e.w.sign() < 0) {
      throw GameError(GameError::Kind::kNegativeWeight,
                      "negative weight on edge " + labels_[e.u] + "-" +
                          labels_[e.v]);
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw GameError(GameError::Kind::kDuplicateEdge,
                      "duplicate edge " + labels_[edges[i].u] + "-" +
                          labels_[edges[i].v]);
    }
  }
  edges_ = std::move(edges);
  incident_.assign(n, {});
  for (EdgeId id = 0; id < edge_count(); ++id) {
    incident_[edges_[id].u].push_back(id);
    incident_[edges_[id].v].push_back(id);
  }
}

GameInstance GameInstance::WithDefaultLabels(int node_count,
                                             std::vector<Edge> edges) {
  std::vector<std::string> labels;
  for (int i = 1; i <= node_count; ++i) labels.push_back(std::to_string(i));
  return GameInstance(std::move(labels), std::move(edges));
}

std::optional<EdgeId> GameInstance::FindEdge(NodeId a, NodeId b) const {
  if (a > b) std::swap(a, b);
  const auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::make_pair(a, b),
      [](const Edge& e, const std::pair<int, int>& key) {
        return e.u != key.first ? e.u < key.first : e.v < key.second;
      });
  if (it == edges_.end() || it->u != a || it->v != b) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

GameInstance GameInstance::Induced(const std::vector<NodeId>& nodes,
                                   std::vector<EdgeId>* edge_map) const {
  std::vector<int> index(node_count(), -1);
  std::vector<std::string> labels;
  for (size_t i = 0; i < nodes.size(); ++i) {
    index[nodes[i]] = static_cast<int>(i);
    labels.push_back(labels_[nodes[i]]);
  }
  std::vector<Edge> sub;
  if (edge_map) edge_map->clear();
  for (EdgeId id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      sub.push_back({index[e.u], index[e.v], e.w});
      if (edge_map) edge_map->push_back(id);
    }
  }
  // Node order is preserved, so sub is already canonically sorted.
  return GameInstance(std::move(labels), std::move(sub));
}

bool operator==(const GameInstance& a, const GameInstance& b) {
  if (a.labels_ != b.labels_ || a.edges_.size() != b.edges_.size()) return false;
  for (size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
  }
  return true;
}

Matching Matching::FromEdges(const GameInstance& game,
                             std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  std::vector<char> used(game.node_count(), 0);
  for (size_t i = 0; i < edges.size(); ++i) {
    const EdgeId e = edges[i];
    if (e < 0 || e >= game.edge_count())
      throw std::invalid_argument("edge id out of range");
    if (i > 0 && edges[i - 1] == e)
      throw std::invalid_argument("repeated edge in matching");
    const Edge& ed = game.edge(e);
    if (used[ed.u] || used[ed.v])
      throw std::invalid_argument("edges of a matching must be disjoint");
    used[ed.u] = used[ed.v] = 1;
  }
  return Matching(std::move(edges));
}

Matching::Matching(std::vector<EdgeId> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
}

bool Matching::contains(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Coalition::Coalition(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Coalition Coalition::All(int node_count) {
  std::vector<NodeId> m(node_count);
  for (int i = 0; i < node_count; ++i) m[i] = i;
  return Coalition(std::move(m));
}

Coalition Coalition::FromMask(unsigned long long mask) {
  std::vector<NodeId> m;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1ULL) m.push_back(i);
  }
  return Coalition(std::move(m));
}

bool Coalition::contains(NodeId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool Coalition::IsSubsetOf(const Coalition& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool Coalition::Intersects(const Coalition& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

unsigned long long Coalition::Mask() const {
  unsigned long long mask = 0;
  for (NodeId v : members_) {
    if (v >= 64) throw std::out_of_range("coalition too large for a mask");
    mask |= 1ULL << v;
  }
  return mask;
}

Rational MatchingWeight(const GameInstance& game, const Matching& m) {
  Rational total;
  for (EdgeId e : m.edges()) total += game.edge(e).w;
  return total;
}

Coalition CoveredNodes(const GameInstance& game, const Matching& m) {
  std::vector<NodeId> nodes;
  for (EdgeId e : m.edges()) {
    nodes.push_back(game.edge(e).u);
    nodes.push_back(game.edge(e).v);
  }
  return Coalition(std::move(nodes));
}

Rational SumOver(const Allocation& x, const Coalition& s) {
  Rational total;
  for (NodeId v : s.members()) total += x[v];
  return total;
}

Rational EdgeSum(const GameInstance& game, const Allocation& x, EdgeId e) {
  return x[game.edge(e).u] + x[game.edge(e).v];
}

Rational Excess(const GameInstance& game, const Allocation& x,
                const Matching& m) {
  Rational total;
  for (EdgeId e : m.edges()) total += EdgeSum(game, x, e) - game.edge(e).w;
  return total;
}

Rational CoalitionExcess(const Allocation& x, const Coalition& s,
                         const Rational& nu_s) {
  return SumOver(x, s) - nu_s;
}

Rational Sym(const Allocation& x, const Allocation& x_star,
             const Coalition& s) {
  return SumOver(x, s) - SumOver(x_star, s);
}

std::vector<EdgeId> EdgesInside(const GameInstance& game, const Coalition& s) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < game.edge_count(); ++e) {
    if (s.contains(game.edge(e).u) && s.contains(game.edge(e).v))
      out.push_back(e);
  }
  return out;
}

std::string FormatAllocation(const GameInstance& game, const Allocation& x) {
  std::ostringstream os;
  os << "(";
  for (NodeId v = 0; v < game.node_count(); ++v) {
    if (v) os << ", ";
    os << x[v];
  }
  os << ")";
  return os.str();
}

}  // namespace matchgame

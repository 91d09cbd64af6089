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

#include "matchgame/game_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace matchgame {
namespace {

using json = nlohmann::json;

[[noreturn]] void Syntax(const std::string& what) {
  throw GameError(GameError::Kind::kSyntax, what);
}

NodeId ParseNodeIndex(const std::string& token, int line) {
  size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    Syntax("line " + std::to_string(line) + ": bad node '" + token + "'");
  }
  if (used != token.size())
    Syntax("line " + std::to_string(line) + ": bad node '" + token + "'");
  return static_cast<NodeId>(value);
}

GameInstance LoadEdgeList(std::istream& in) {
  std::vector<std::pair<int, std::string>> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(number, raw);
  }
  if (lines.empty()) Syntax("empty edge list");

  std::istringstream header(lines[0].second);
  long n = -1;
  long m = -1;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra))
    Syntax("line " + std::to_string(lines[0].first) + ": expected 'n m'");
  if (n <= 0) throw GameError(GameError::Kind::kBadNode, "node count must be positive");
  if (m < 0) Syntax("negative edge count");
  if (static_cast<long>(lines.size()) - 1 != m) {
    Syntax("header announces " + std::to_string(m) + " edges, found " +
           std::to_string(lines.size() - 1));
  }

  std::vector<Edge> edges;
  for (size_t i = 1; i < lines.size(); ++i) {
    const int line = lines[i].first;
    std::istringstream row(lines[i].second);
    std::string us, vs, ws;
    if (!(row >> us >> vs >> ws) || (row >> extra))
      Syntax("line " + std::to_string(line) + ": expected 'u v w'");
    const NodeId u = ParseNodeIndex(us, line);
    const NodeId v = ParseNodeIndex(vs, line);
    if (u < 1 || u > n || v < 1 || v > n) {
      throw GameError(GameError::Kind::kBadNode,
                      "line " + std::to_string(line) + ": node out of range 1.." +
                          std::to_string(n));
    }
    edges.push_back({u - 1, v - 1, ParseWeight(ws)});
  }
  return GameInstance::WithDefaultLabels(static_cast<int>(n), std::move(edges));
}

Rational WeightFromJson(const json& w) {
  if (w.is_string()) return ParseWeight(w.get<std::string>());
  if (w.is_number()) return ParseWeight(w.dump());
  Syntax("edge weight must be a number or a string");
}

NodeId NodeFromJson(const json& v) {
  if (!v.is_number_integer()) Syntax("edge endpoint must be an integer");
  return v.get<NodeId>();
}

GameInstance LoadJson(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    Syntax(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) Syntax("top-level JSON value must be an object");
  if (!doc.contains("nodes") || !doc["nodes"].is_array())
    Syntax("missing 'nodes' array");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    Syntax("missing 'edges' array");
  std::vector<std::string> labels;
  for (const json& node : doc["nodes"]) {
    if (node.is_string()) {
      labels.push_back(node.get<std::string>());
    } else if (node.is_number_integer()) {
      labels.push_back(node.dump());
    } else {
      Syntax("node labels must be strings or integers");
    }
  }
  std::vector<Edge> edges;
  for (const json& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("u") || !e.contains("v"))
      Syntax("each edge needs 'u' and 'v'");
    Edge edge;
    edge.u = NodeFromJson(e["u"]);
    edge.v = NodeFromJson(e["v"]);
    edge.w = e.contains("w") ? WeightFromJson(e["w"]) : Rational(1);
    edges.push_back(std::move(edge));
  }
  return GameInstance(std::move(labels), std::move(edges));
}

}  // namespace

Rational ParseWeight(std::string_view text) {
  const auto r = Rational::Parse(text);
  if (!r) Syntax("bad weight '" + std::string(text) + "'");
  return *r;
}

GameInstance LoadGame(std::istream& in, GameFormat format) {
  return format == GameFormat::kJson ? LoadJson(in) : LoadEdgeList(in);
}

GameInstance LoadGameString(std::string_view text, GameFormat format) {
  std::istringstream in{std::string(text)};
  return LoadGame(in, format);
}

GameFormat SniffFormat(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return GameFormat::kJson;
  return GameFormat::kEdgeList;
}

GameInstance LoadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GameError(GameError::Kind::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return LoadGameString(text, SniffFormat(text));
}

void SaveGame(std::ostream& out, const GameInstance& game, GameFormat format) {
  if (format == GameFormat::kEdgeList) {
    out << game.node_count() << ' ' << game.edge_count() << '\n';
    for (const Edge& e : game.edges())
      out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
    return;
  }
  nlohmann::ordered_json doc;
  doc["nodes"] = game.labels();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : game.edges()) {
    doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"w", e.w.ToString()}});
  }
  out << doc.dump(2) << '\n';
}

std::string SaveGameString(const GameInstance& game, GameFormat format) {
  std::ostringstream out;
  SaveGame(out, game, format);
  return out.str();
}

}  // namespace matchgame

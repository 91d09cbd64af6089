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

#ifndef MATCHGAME_GAME_IO_HPP_
#define MATCHGAME_GAME_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "matchgame/game.hpp"

namespace matchgame {

enum class GameFormat { kJson, kEdgeList };

// JSON: {"nodes": ["a", ...], "edges": [{"u": 0, "v": 1, "w": "3/2"}, ...]}
// with 0-based endpoints. Edge list: a header line "n m" followed by m lines
// "u v w" with 1-based endpoints. Weights may be integers, "p/q", or
// terminating decimals; all are converted exactly. Errors throw GameError.
GameInstance LoadGame(std::istream& in, GameFormat format);
GameInstance LoadGameString(std::string_view text, GameFormat format);

// Picks the format from the first non-blank character ('{' means JSON).
GameInstance LoadGameFile(const std::string& path);
GameFormat SniffFormat(std::string_view text);

void SaveGame(std::ostream& out, const GameInstance& game, GameFormat format);
std::string SaveGameString(const GameInstance& game, GameFormat format);

// Exact weight parsing shared by both formats; throws GameError(kSyntax).
Rational ParseWeight(std::string_view text);

}  // namespace matchgame

#endif  // MATCHGAME_GAME_IO_HPP_

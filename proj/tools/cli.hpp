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

#ifndef MATCHGAME_TOOLS_CLI_HPP_
#define MATCHGAME_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace matchgame::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;      // parse, usage or size-limit error
inline constexpr int kExitInvariant = 2;  // internal consistency check failed
inline constexpr int kExitMismatch = 3;   // --check disagreed with the oracle
inline constexpr int kExitCoreNonempty = 4;

// Runs one command. args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Lowercase hex SHA-256 of the bytes.
std::string Sha256Hex(const std::string& bytes);

}  // namespace matchgame::cli

#endif  // MATCHGAME_TOOLS_CLI_HPP_

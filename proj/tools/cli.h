// Copyright 2026 The accent_forge Authors.
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

#ifndef ACCENT_FORGE_TOOLS_CLI_H_
#define ACCENT_FORGE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace accent_forge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitErrors = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kLexiconEnv = "ACCENT_FORGE_LEXICON";

// Runs the tool with argv-style arguments (args[0] is the program name).
// "-" as an input path reads `in`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace accent_forge::cli

#endif  // ACCENT_FORGE_TOOLS_CLI_H_

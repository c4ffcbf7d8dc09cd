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

#ifndef ACCENT_FORGE_SYMBOL_CODEC_H_
#define ACCENT_FORGE_SYMBOL_CODEC_H_

#include <array>
#include <string>
#include <string_view>

namespace accent_forge {

// Label streams are written either with ASCII display symbols or with the
// interchange code points a recognizer emits instead of them.
enum class SymbolMode { kDisplay, kInterchange };

struct SymbolPair {
  char32_t display;
  char32_t interchange;
};

inline constexpr std::array<SymbolPair, 5> kSymbolTable{{
    {U'[', U'\u2191'},  // pitch rise
    {U']', U'\u2193'},  // pitch fall
    {U'#', U'\u2460'},  // accent phrase boundary
    {U'_', U'\u2462'},  // pause
    {U'|', U'\u2223'},  // graphemes / labels delimiter
}};

bool IsDisplaySymbol(char32_t cp);
bool IsInterchangeSymbol(char32_t cp);

// Both throw LabelError(kMixedSymbols) if the text already contains symbols
// of both kinds.
std::string EncodeSymbols(std::string_view text);
std::string DecodeSymbols(std::string_view text);

// Mode of the first symbol character found; text with no symbol at all is
// display. Throws on mixed input.
SymbolMode DetectSymbolMode(std::string_view text);

std::string_view SymbolModeName(SymbolMode mode);

}  // namespace accent_forge

#endif  // ACCENT_FORGE_SYMBOL_CODEC_H_

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

#include "accent_forge/symbol_codec.h"

#include "accent_forge/error.h"
#include "accent_forge/utf8.h"

namespace accent_forge {

bool IsDisplaySymbol(char32_t cp) {
  for (const SymbolPair& p : kSymbolTable) {
    if (p.display == cp) return true;
  }
  return false;
}

bool IsInterchangeSymbol(char32_t cp) {
  for (const SymbolPair& p : kSymbolTable) {
    if (p.interchange == cp) return true;
  }
  return false;
}

namespace {

void RejectMixed(const std::u32string& text) {
  bool display = false;
  bool interchange = false;
  for (char32_t cp : text) {
    display = display || IsDisplaySymbol(cp);
    interchange = interchange || IsInterchangeSymbol(cp);
  }
  if (display && interchange) {
    throw LabelError(ErrorCode::kMixedSymbols,
                     "text mixes display symbols and interchange code points");
  }
}

std::string Map(std::string_view text, bool to_interchange) {
  const std::u32string cps = utf8::Decode(text);
  RejectMixed(cps);
  std::string out;
  out.reserve(text.size() + 8);
  for (char32_t cp : cps) {
    for (const SymbolPair& p : kSymbolTable) {
      const char32_t from = to_interchange ? p.display : p.interchange;
      if (cp == from) {
        cp = to_interchange ? p.interchange : p.display;
        break;
      }
    }
    utf8::Append(out, cp);
  }
  return out;
}

}  // namespace

std::string EncodeSymbols(std::string_view text) { return Map(text, true); }

std::string DecodeSymbols(std::string_view text) { return Map(text, false); }

SymbolMode DetectSymbolMode(std::string_view text) {
  const std::u32string cps = utf8::Decode(text);
  RejectMixed(cps);
  for (char32_t cp : cps) {
    if (IsInterchangeSymbol(cp)) return SymbolMode::kInterchange;
    if (IsDisplaySymbol(cp)) return SymbolMode::kDisplay;
  }
  return SymbolMode::kDisplay;
}

std::string_view SymbolModeName(SymbolMode mode) {
  return mode == SymbolMode::kDisplay ? "display" : "interchange";
}

}  // namespace accent_forge

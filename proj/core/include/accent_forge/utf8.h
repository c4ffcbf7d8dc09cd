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

#ifndef ACCENT_FORGE_UTF8_H_
#define ACCENT_FORGE_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace accent_forge::utf8 {

// Decodes strict UTF-8. Throws LabelError(kInvalidUtf8) on malformed input,
// overlong forms and surrogates.
std::u32string Decode(std::string_view text);

char32_t NextSlow(std::string_view text, std::size_t& i);

// Decodes the code point starting at byte `i` and advances `i` past it.
// Throws LabelError on malformed input.
inline char32_t Next(std::string_view text, std::size_t& i) {
  const auto lead = static_cast<unsigned char>(text[i]);
  if (lead < 0x80) {
    ++i;
    return lead;
  }
  // Well-formed three-byte sequences cover all kana and label symbols.
  if ((lead & 0xF0) == 0xE0 && i + 2 < text.size()) {
    const auto b1 = static_cast<unsigned char>(text[i + 1]);
    const auto b2 = static_cast<unsigned char>(text[i + 2]);
    if ((b1 & 0xC0) == 0x80 && (b2 & 0xC0) == 0x80) {
      const char32_t cp = (static_cast<char32_t>(lead & 0x0F) << 12) |
                          (static_cast<char32_t>(b1 & 0x3F) << 6) | (b2 & 0x3F);
      if (cp >= 0x800 && (cp < 0xD800 || cp > 0xDFFF)) {
        i += 3;
        return cp;
      }
    }
  }
  return NextSlow(text, i);
}

void Append(std::string& out, char32_t cp);
std::string Encode(std::u32string_view text);
std::string Encode(char32_t cp);

// Splits into one string per code point.
std::vector<std::string> Characters(std::string_view text);

}  // namespace accent_forge::utf8

#endif  // ACCENT_FORGE_UTF8_H_

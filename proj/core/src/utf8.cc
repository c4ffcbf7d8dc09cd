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

#include "accent_forge/utf8.h"

#include "accent_forge/error.h"

namespace accent_forge::utf8 {

namespace {

[[noreturn]] void Fail(std::size_t offset) {
  throw LabelError(ErrorCode::kInvalidUtf8,
                   "invalid UTF-8 at byte " + std::to_string(offset));
}

}  // namespace

char32_t NextSlow(std::string_view text, std::size_t& i) {
  const auto lead = static_cast<unsigned char>(text[i]);
  if (lead < 0x80) {
    ++i;
    return lead;
  }
  std::size_t extra = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
    min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
    min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
    min = 0x10000;
  } else {
    Fail(i);
  }
  if (i + extra >= text.size()) Fail(i);
  for (std::size_t k = 1; k <= extra; ++k) {
    const auto cont = static_cast<unsigned char>(text[i + k]);
    if ((cont & 0xC0) != 0x80) Fail(i);
    cp = (cp << 6) | (cont & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) Fail(i);
  i += extra + 1;
  return cp;
}

std::u32string Decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) out.push_back(Next(text, i));
  return out;
}

void Append(std::string& out, char32_t cp) {
  char buffer[4];
  std::size_t length = 0;
  if (cp < 0x80) {
    buffer[length++] = static_cast<char>(cp);
  } else if (cp < 0x800) {
    buffer[length++] = static_cast<char>(0xC0 | (cp >> 6));
    buffer[length++] = static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    buffer[length++] = static_cast<char>(0xE0 | (cp >> 12));
    buffer[length++] = static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    buffer[length++] = static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    buffer[length++] = static_cast<char>(0xF0 | (cp >> 18));
    buffer[length++] = static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    buffer[length++] = static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    buffer[length++] = static_cast<char>(0x80 | (cp & 0x3F));
  }
  out.append(buffer, length);
}

std::string Encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 3);
  for (char32_t cp : text) Append(out, cp);
  return out;
}

std::string Encode(char32_t cp) {
  std::string out;
  Append(out, cp);
  return out;
}

std::vector<std::string> Characters(std::string_view text) {
  std::vector<std::string> out;
  for (char32_t cp : Decode(text)) out.push_back(Encode(cp));
  return out;
}

}  // namespace accent_forge::utf8

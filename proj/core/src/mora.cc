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

#include "accent_forge/mora.h"

#include <algorithm>

#include "accent_forge/error.h"
#include "accent_forge/utf8.h"

namespace accent_forge {

Mora Mora::FromText(std::string_view text) {
  MoraSequence moras = SegmentMoras(text);
  if (moras.size() != 1) {
    throw LabelError(ErrorCode::kInvalidArgument,
                     "expected exactly one mora, got '" + std::string(text) +
                         "'");
  }
  return moras.front();
}

MoraBuilder::Result MoraBuilder::Push(char32_t cp) {
  std::string bytes;
  utf8::Append(bytes, cp);
  return Push(cp, bytes);
}

MoraSequence SegmentMoras(std::string_view katakana) {
  MoraBuilder builder;
  std::size_t index = 0;
  for (char32_t cp : utf8::Decode(katakana)) {
    switch (builder.Push(cp)) {
      case MoraBuilder::Result::kOrphan:
        throw LabelError(ErrorCode::kOrphanCombiningKana,
                         "combining kana '" + utf8::Encode(cp) +
                             "' at code point " + std::to_string(index) +
                             " has no base kana");
      case MoraBuilder::Result::kNotKana:
        throw LabelError(ErrorCode::kNonKatakana,
                         "non-Katakana code point '" + utf8::Encode(cp) +
                             "' at " + std::to_string(index));
      default:
        break;
    }
    ++index;
  }
  return builder.Take();
}

std::string JoinMoras(std::span<const Mora> moras) {
  std::string out;
  for (const Mora& m : moras) out += m.text();
  return out;
}

std::string ToKatakana(std::string_view text) {
  std::string out;
  for (char32_t cp : utf8::Decode(text)) utf8::Append(out, HiraganaToKatakana(cp));
  return out;
}

}  // namespace accent_forge

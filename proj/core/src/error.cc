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

#include "accent_forge/error.h"

namespace accent_forge {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidUtf8: return "invalid-utf8";
    case ErrorCode::kNonKatakana: return "non-katakana";
    case ErrorCode::kOrphanCombiningKana: return "orphan-combining-kana";
    case ErrorCode::kEmptyPronunciation: return "empty-pronunciation";
    case ErrorCode::kDuplicateMarker: return "duplicate-marker";
    case ErrorCode::kMarkerOrder: return "marker-order";
    case ErrorCode::kMisplacedRise: return "misplaced-rise";
    case ErrorCode::kMisplacedFall: return "misplaced-fall";
    case ErrorCode::kMissingRise: return "missing-rise";
    case ErrorCode::kInvalidAccent: return "invalid-accent";
    case ErrorCode::kIllegalPitchPattern: return "illegal-pitch-pattern";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kUnterminatedPhrase: return "unterminated-phrase";
    case ErrorCode::kEmptyGraphemes: return "empty-graphemes";
    case ErrorCode::kDelimiterMismatch: return "delimiter-mismatch";
    case ErrorCode::kMisplacedPause: return "misplaced-pause";
    case ErrorCode::kMixedSymbols: return "mixed-symbols";
    case ErrorCode::kMalformedLexiconRow: return "malformed-lexicon-row";
    case ErrorCode::kMissingGraphemes: return "missing-graphemes";
    case ErrorCode::kEmptyReference: return "empty-reference";
    case ErrorCode::kIdMismatch: return "id-mismatch";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

namespace {

std::string Compose(const std::string& message, std::size_t phrase_index) {
  if (phrase_index == 0) return message;
  return "phrase " + std::to_string(phrase_index) + ": " + message;
}

}  // namespace

LabelError::LabelError(ErrorCode code, const std::string& message,
                       std::size_t phrase_index)
    : std::runtime_error(Compose(message, phrase_index)),
      code_(code),
      phrase_index_(phrase_index),
      detail_(message) {}

LabelError LabelError::WithPhraseIndex(std::size_t index) const {
  return LabelError(code_, detail_, index);
}

}  // namespace accent_forge

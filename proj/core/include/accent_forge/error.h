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

#ifndef ACCENT_FORGE_ERROR_H_
#define ACCENT_FORGE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace accent_forge {

enum class ErrorCode {
  kInvalidUtf8,
  kNonKatakana,
  kOrphanCombiningKana,
  kEmptyPronunciation,
  kDuplicateMarker,
  kMarkerOrder,
  kMisplacedRise,
  kMisplacedFall,
  kMissingRise,
  kInvalidAccent,
  kIllegalPitchPattern,
  kLengthMismatch,
  kUnterminatedPhrase,
  kEmptyGraphemes,
  kDelimiterMismatch,
  kMisplacedPause,
  kMixedSymbols,
  kMalformedLexiconRow,
  kMissingGraphemes,
  kEmptyReference,
  kIdMismatch,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// Thrown for every malformed label, lexicon row or precondition violation.
// `phrase_index` is 1-based when the error is attributable to a phrase inside
// an utterance and 0 otherwise.
class LabelError : public std::runtime_error {
 public:
  LabelError(ErrorCode code, const std::string& message,
             std::size_t phrase_index = 0);

  ErrorCode code() const { return code_; }
  std::size_t phrase_index() const { return phrase_index_; }
  // Message without the phrase prefix.
  const std::string& detail() const { return detail_; }

  LabelError WithPhraseIndex(std::size_t index) const;

 private:
  ErrorCode code_;
  std::size_t phrase_index_;
  std::string detail_;
};

}  // namespace accent_forge

#endif  // ACCENT_FORGE_ERROR_H_

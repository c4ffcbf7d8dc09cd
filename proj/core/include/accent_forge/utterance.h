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

#ifndef ACCENT_FORGE_UTTERANCE_H_
#define ACCENT_FORGE_UTTERANCE_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "accent_forge/accent_phrase.h"

namespace accent_forge {

struct Pause {
  friend bool operator==(const Pause&, const Pause&) = default;
};

struct PhraseItem {
  // Present only for streams written as "graphemes|labels#".
  std::optional<std::string> graphemes;
  AccentPhrase phrase;

  friend bool operator==(const PhraseItem&, const PhraseItem&) = default;
};

using UtteranceItem = std::variant<PhraseItem, Pause>;

// Accent phrases and pauses of one utterance, in order.
class UtteranceAnnotation {
 public:
  UtteranceAnnotation() = default;
  explicit UtteranceAnnotation(std::vector<UtteranceItem> items);

  const std::vector<UtteranceItem>& items() const { return items_; }
  std::vector<const PhraseItem*> phrases() const;
  std::size_t phrase_count() const;
  bool empty() const { return items_.empty(); }
  // True when every phrase carries graphemes (vacuously true when empty).
  bool has_graphemes() const;

  // Concatenated Katakana of every phrase.
  std::string Phonemes() const;
  MoraSequence Moras() const;
  PitchSequence Pitch() const;
  std::string Graphemes() const;
  // [start, end) mora offsets of each phrase in Moras().
  std::vector<std::pair<int, int>> PhraseSpans() const;

  // Display-symbol text that ParseUtterance maps back to *this.
  std::string Serialize() const;

  friend bool operator==(const UtteranceAnnotation&,
                         const UtteranceAnnotation&) = default;

 private:
  std::vector<UtteranceItem> items_;
};

struct ParseOptions {
  bool with_graphemes = false;
  // Lenient parsing records violations instead of throwing.
  bool strict = true;
};

struct UtteranceParse {
  UtteranceAnnotation annotation;
  std::vector<LabelError> violations;
};

// Parses display-symbol text. In strict mode the first violation is thrown
// as a LabelError carrying the 1-based phrase index.
UtteranceParse ParseUtterance(std::string_view text, ParseOptions options);

inline UtteranceAnnotation ParseUtterance(std::string_view text,
                                          bool with_graphemes) {
  return ParseUtterance(text, ParseOptions{with_graphemes, true}).annotation;
}

// True if the text contains the grapheme delimiter in either symbol set.
bool HasGraphemeDelimiter(std::string_view text);

}  // namespace accent_forge

#endif  // ACCENT_FORGE_UTTERANCE_H_

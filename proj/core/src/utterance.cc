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

#include "accent_forge/utterance.h"

#include <algorithm>

#include "accent_forge/utf8.h"

namespace accent_forge {

UtteranceAnnotation::UtteranceAnnotation(std::vector<UtteranceItem> items)
    : items_(std::move(items)) {
  for (const auto& item : items_) {
    if (const auto* p = std::get_if<PhraseItem>(&item);
        p && p->graphemes && p->graphemes->empty()) {
      throw LabelError(ErrorCode::kEmptyGraphemes, "empty graphemes");
    }
  }
}

std::vector<const PhraseItem*> UtteranceAnnotation::phrases() const {
  std::vector<const PhraseItem*> out;
  for (const auto& item : items_) {
    if (const auto* p = std::get_if<PhraseItem>(&item)) out.push_back(p);
  }
  return out;
}

std::size_t UtteranceAnnotation::phrase_count() const {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [](const UtteranceItem& i) {
        return std::holds_alternative<PhraseItem>(i);
      }));
}

bool UtteranceAnnotation::has_graphemes() const {
  return std::all_of(items_.begin(), items_.end(), [](const UtteranceItem& i) {
    const auto* p = std::get_if<PhraseItem>(&i);
    return p == nullptr || p->graphemes.has_value();
  });
}

std::string UtteranceAnnotation::Phonemes() const {
  std::string out;
  for (const PhraseItem* p : phrases()) out += p->phrase.Pronunciation();
  return out;
}

MoraSequence UtteranceAnnotation::Moras() const {
  MoraSequence out;
  for (const PhraseItem* p : phrases()) {
    out.insert(out.end(), p->phrase.moras().begin(), p->phrase.moras().end());
  }
  return out;
}

PitchSequence UtteranceAnnotation::Pitch() const {
  PitchSequence out;
  for (const PhraseItem* p : phrases()) {
    PitchSequence part = AccentToPitch(p->phrase);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string UtteranceAnnotation::Graphemes() const {
  std::string out;
  for (const PhraseItem* p : phrases()) {
    if (p->graphemes) out += *p->graphemes;
  }
  return out;
}

std::vector<std::pair<int, int>> UtteranceAnnotation::PhraseSpans() const {
  std::vector<std::pair<int, int>> spans;
  int offset = 0;
  for (const PhraseItem* p : phrases()) {
    spans.emplace_back(offset, offset + p->phrase.size());
    offset += p->phrase.size();
  }
  return spans;
}

std::string UtteranceAnnotation::Serialize() const {
  std::string out;
  for (const auto& item : items_) {
    if (std::holds_alternative<Pause>(item)) {
      out.push_back('_');
      continue;
    }
    const auto& p = std::get<PhraseItem>(item);
    if (p.graphemes) {
      out += *p.graphemes;
      out.push_back('|');
    }
    out += SerializePhrase(p.phrase);
    out.push_back('#');
  }
  return out;
}

namespace {

class UtteranceParser {
 public:
  UtteranceParser(std::string_view text, ParseOptions options)
      : text_(text), options_(options) {}

  UtteranceParse Run() {
    // Rejects malformed UTF-8 up front; every symbol below is ASCII, so
    // byte-level scanning never splits a multi-byte sequence.
    utf8::Decode(text_);
    std::vector<UtteranceItem> items;
    std::size_t pos = 0;
    while (pos < text_.size()) {
      if (text_[pos] == '_') {
        items.emplace_back(Pause{});
        ++pos;
        continue;
      }
      ++phrase_index_;
      const std::size_t end = text_.find('#', pos);
      const bool terminated = end != std::string_view::npos;
      const std::string_view chunk =
          text_.substr(pos, (terminated ? end : text_.size()) - pos);
      if (!terminated) {
        Report(ErrorCode::kUnterminatedPhrase,
               "phrase '" + std::string(chunk) + "' is not terminated by '#'");
      }
      if (auto item = ParseChunk(chunk)) items.emplace_back(std::move(*item));
      pos = terminated ? end + 1 : text_.size();
    }
    result_.annotation = UtteranceAnnotation(std::move(items));
    return std::move(result_);
  }

 private:
  void Report(ErrorCode code, const std::string& message) {
    LabelError error(code, message, phrase_index_);
    if (options_.strict) throw error;
    result_.violations.push_back(std::move(error));
  }

  std::optional<PhraseItem> ParseChunk(std::string_view chunk) {
    std::optional<std::string> graphemes;
    std::string_view labels = chunk;
    const auto delimiters = std::count(chunk.begin(), chunk.end(), '|');
    const std::size_t split = chunk.rfind('|');
    if (options_.with_graphemes) {
      if (delimiters != 1) {
        Report(ErrorCode::kDelimiterMismatch,
               "expected one '|' in phrase, found " +
                   std::to_string(delimiters));
      }
      if (split != std::string_view::npos) {
        labels = chunk.substr(split + 1);
        graphemes = std::string(chunk.substr(0, split));
        if (graphemes->empty()) {
          Report(ErrorCode::kEmptyGraphemes, "empty graphemes");
          graphemes.reset();
        }
      }
    } else if (delimiters > 0) {
      Report(ErrorCode::kDelimiterMismatch,
             "unexpected '|' in a stream without graphemes");
      labels = chunk.substr(split + 1);
    }

    std::string cleaned(labels);
    if (cleaned.find('_') != std::string::npos) {
      Report(ErrorCode::kMisplacedPause,
             "pause '_' inside phrase '" + std::string(labels) + "'");
      std::erase(cleaned, '_');
    }

    if (options_.strict) {
      try {
        return PhraseItem{std::move(graphemes), ParsePhrase(cleaned)};
      } catch (const LabelError& e) {
        throw e.WithPhraseIndex(phrase_index_);
      }
    }
    std::vector<LabelError> issues;
    std::optional<AccentPhrase> phrase = ParsePhraseLenient(cleaned, issues);
    for (const LabelError& e : issues) {
      result_.violations.push_back(e.WithPhraseIndex(phrase_index_));
    }
    if (!phrase) return std::nullopt;
    return PhraseItem{std::move(graphemes), std::move(*phrase)};
  }

  std::string_view text_;
  ParseOptions options_;
  std::size_t phrase_index_ = 0;
  UtteranceParse result_;
};

}  // namespace

UtteranceParse ParseUtterance(std::string_view text, ParseOptions options) {
  return UtteranceParser(text, options).Run();
}

bool HasGraphemeDelimiter(std::string_view text) {
  return text.find('|') != std::string_view::npos ||
         text.find("\u2223") != std::string_view::npos;
}

}  // namespace accent_forge

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

#include "accent_forge/accent_phrase.h"

#include <algorithm>

#include "accent_forge/utf8.h"

namespace accent_forge {

AccentPhrase::AccentPhrase(MoraSequence moras, int accent)
    : moras_(std::move(moras)), accent_(accent) {
  if (moras_.empty()) {
    throw LabelError(ErrorCode::kEmptyPronunciation, "empty pronunciation");
  }
  if (accent_ < 0 || accent_ > size()) {
    throw LabelError(ErrorCode::kInvalidAccent,
                     "accent type " + std::to_string(accent_) +
                         " outside [0, " + std::to_string(size()) + "]");
  }
}

AccentClass AccentPhrase::Classify() const {
  if (accent_ == 0) return AccentClass::kFlat;
  if (accent_ == 1) return AccentClass::kHeadHigh;
  if (accent_ == size()) return AccentClass::kTailHigh;
  return AccentClass::kMiddleHigh;
}

std::string PitchToString(std::span<const Pitch> pitch) {
  std::string out;
  out.reserve(pitch.size());
  for (Pitch p : pitch) out.push_back(static_cast<char>(p));
  return out;
}

PitchSequence PitchFromString(std::string_view text) {
  PitchSequence out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == 'H') {
      out.push_back(Pitch::kHigh);
    } else if (c == 'L') {
      out.push_back(Pitch::kLow);
    } else {
      throw LabelError(ErrorCode::kInvalidArgument,
                       std::string("pitch symbol '") + c + "' is not H or L");
    }
  }
  return out;
}

namespace {

// Raw result of walking a label: moras plus every marker position, counted
// as the number of moras preceding the marker.
struct Marker {
  std::optional<int> first;
  int count = 0;
};

struct PhraseScan {
  MoraSequence moras;
  Marker rise;
  Marker fall;
  std::vector<LabelError> issues;
};

PhraseScan Scan(std::string_view label) {
  PhraseScan scan;
  MoraBuilder builder;
  builder.moras().reserve(label.size() / 3);
  std::size_t index = 0;
  for (std::size_t i = 0; i < label.size();) {
    const std::size_t start = i;
    const char32_t cp = utf8::Next(label, i);
    if (cp == kRiseMarker || cp == kFallMarker) {
      Marker& marker = cp == kRiseMarker ? scan.rise : scan.fall;
      if (!marker.first) marker.first = static_cast<int>(builder.moras().size());
      if (++marker.count == 2) {
        scan.issues.emplace_back(ErrorCode::kDuplicateMarker,
                                 std::string("duplicate '") +
                                     static_cast<char>(cp) + "' marker");
      }
      builder.Break();
    } else {
      switch (builder.Push(cp, label.substr(start, i - start))) {
        case MoraBuilder::Result::kOrphan:
          scan.issues.emplace_back(
              ErrorCode::kOrphanCombiningKana,
              "combining kana '" + utf8::Encode(cp) + "' at code point " +
                  std::to_string(index) + " has no base kana");
          break;
        case MoraBuilder::Result::kNotKana:
          scan.issues.emplace_back(ErrorCode::kNonKatakana,
                                   "non-Katakana code point '" +
                                       utf8::Encode(cp) + "' at " +
                                       std::to_string(index));
          break;
        default:
          break;
      }
    }
    ++index;
  }
  scan.moras = builder.Take();
  return scan;
}

// Checks marker placement. Returns the accent type when the placement is
// legal, otherwise records the first violation and returns nullopt.
std::optional<int> CheckStructure(int n, std::optional<int> rise,
                                  std::optional<int> fall,
                                  std::vector<LabelError>& issues) {
  if (rise && fall && *fall <= *rise) {
    issues.emplace_back(ErrorCode::kMarkerOrder,
                        "pitch fall ']' precedes rise '['");
    return std::nullopt;
  }
  if (rise && (*rise != 1 || n < 2)) {
    issues.emplace_back(ErrorCode::kMisplacedRise,
                        "rise '[' must follow the first mora of a phrase "
                        "with at least two moras");
    return std::nullopt;
  }
  if (fall && (*fall < 1 || *fall > n)) {
    issues.emplace_back(ErrorCode::kMisplacedFall,
                        "fall ']' must follow a mora");
    return std::nullopt;
  }
  if (fall && *fall >= 2 && !rise) {
    issues.emplace_back(ErrorCode::kMissingRise,
                        "accent type " + std::to_string(*fall) +
                            " requires '[' after the first mora");
    return std::nullopt;
  }
  if (!fall && n >= 2 && !rise) {
    issues.emplace_back(ErrorCode::kMissingRise,
                        "flat phrase of " + std::to_string(n) +
                            " moras requires '[' after the first mora");
    return std::nullopt;
  }
  return fall.value_or(0);
}

}  // namespace

AccentPhrase ParsePhrase(std::string_view label) {
  PhraseScan scan = Scan(label);
  if (!scan.issues.empty()) throw scan.issues.front();
  if (scan.moras.empty()) {
    throw LabelError(ErrorCode::kEmptyPronunciation,
                     "phrase '" + std::string(label) + "' has no moras");
  }
  std::vector<LabelError> issues;
  const int n = static_cast<int>(scan.moras.size());
  std::optional<int> accent =
      CheckStructure(n, scan.rise.first, scan.fall.first, issues);
  if (!accent) throw issues.front();
  return AccentPhrase(std::move(scan.moras), *accent);
}

std::optional<AccentPhrase> ParsePhraseLenient(
    std::string_view label, std::vector<LabelError>& violations) {
  PhraseScan scan;
  try {
    scan = Scan(label);
  } catch (const LabelError& e) {
    violations.push_back(e);
    return std::nullopt;
  }
  violations.insert(violations.end(), scan.issues.begin(), scan.issues.end());
  if (scan.moras.empty()) {
    violations.emplace_back(ErrorCode::kEmptyPronunciation,
                            "phrase '" + std::string(label) + "' has no moras");
    return std::nullopt;
  }
  const int n = static_cast<int>(scan.moras.size());
  std::optional<int> accent =
      CheckStructure(n, scan.rise.first, scan.fall.first, violations);
  if (!accent) {
    // The fall marker is the only accent evidence worth keeping.
    const int fall = scan.fall.first.value_or(0);
    accent = std::clamp(fall, 0, n);
  }
  return AccentPhrase(std::move(scan.moras), *accent);
}

std::string SerializePhrase(const AccentPhrase& phrase) {
  const MoraSequence& moras = phrase.moras();
  const int n = phrase.size();
  const int accent = phrase.accent();
  const bool rise = n >= 2 && accent != 1;
  std::size_t bytes = (rise ? 1 : 0) + (accent > 0 ? 1 : 0);
  for (const Mora& m : moras) bytes += m.text().size();
  std::string out(bytes, '\0');
  char* p = out.data();
  for (int i = 0; i < n; ++i) {
    const std::string_view text = moras[i].text();
    p = std::copy(text.begin(), text.end(), p);
    if (i == 0 && rise) *p++ = '[';
    if (i + 1 == accent) *p++ = ']';
  }
  return out;
}

PitchSequence AccentToPitch(const AccentPhrase& phrase) {
  const int n = phrase.size();
  const int accent = phrase.accent();
  PitchSequence pitch(n, Pitch::kLow);
  if (accent == 1) {
    pitch[0] = Pitch::kHigh;
    return pitch;
  }
  const int high_end = accent == 0 ? n : accent;
  for (int i = 1; i < high_end; ++i) pitch[i] = Pitch::kHigh;
  return pitch;
}

int AccentFromPitch(std::span<const Pitch> pitch) {
  const int n = static_cast<int>(pitch.size());
  auto illegal = [&] {
    return LabelError(ErrorCode::kIllegalPitchPattern,
                      "pitch " + PitchToString(pitch) +
                          " matches no Tokyo accent pattern");
  };
  if (n == 0) {
    throw LabelError(ErrorCode::kEmptyPronunciation, "empty pronunciation");
  }
  int accent = 0;
  if (pitch[0] == Pitch::kHigh) {
    accent = 1;
    for (int i = 1; i < n; ++i) {
      if (pitch[i] != Pitch::kLow) throw illegal();
    }
  } else if (n >= 2) {
    if (pitch[1] != Pitch::kHigh) throw illegal();
    int fall = 2;
    while (fall < n && pitch[fall] == Pitch::kHigh) ++fall;
    for (int i = fall; i < n; ++i) {
      if (pitch[i] != Pitch::kLow) throw illegal();
    }
    accent = fall == n ? 0 : fall;
  }
  return accent;
}

AccentPhrase PitchToAccent(MoraSequence moras, std::span<const Pitch> pitch) {
  if (pitch.size() != moras.size()) {
    throw LabelError(ErrorCode::kLengthMismatch,
                     std::to_string(pitch.size()) + " pitch levels for " +
                         std::to_string(moras.size()) + " moras");
  }
  const int accent = AccentFromPitch(pitch);
  return AccentPhrase(std::move(moras), accent);
}

}  // namespace accent_forge

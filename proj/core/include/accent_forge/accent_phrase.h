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

#ifndef ACCENT_FORGE_ACCENT_PHRASE_H_
#define ACCENT_FORGE_ACCENT_PHRASE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accent_forge/error.h"
#include "accent_forge/mora.h"

namespace accent_forge {

inline constexpr char32_t kRiseMarker = U'[';
inline constexpr char32_t kFallMarker = U']';

enum class AccentClass { kFlat, kHeadHigh, kMiddleHigh, kTailHigh };

// A pronunciation plus the position of its accent nucleus. The accent type
// is the 1-based index of the mora after which the pitch falls, or 0 for a
// flat phrase. Always satisfies 0 <= accent <= size() and size() >= 1.
class AccentPhrase {
 public:
  // Throws LabelError for an empty pronunciation or an out-of-range accent.
  AccentPhrase(MoraSequence moras, int accent);

  const MoraSequence& moras() const { return moras_; }
  int accent() const { return accent_; }
  int size() const { return static_cast<int>(moras_.size()); }
  std::string Pronunciation() const { return JoinMoras(moras_); }

  // For a single mora, accent 1 is reported as head-high.
  AccentClass Classify() const;

  friend bool operator==(const AccentPhrase&, const AccentPhrase&) = default;

 private:
  MoraSequence moras_;
  int accent_;
};

enum class Pitch : char { kLow = 'L', kHigh = 'H' };
using PitchSequence = std::vector<Pitch>;

std::string PitchToString(std::span<const Pitch> pitch);
// Accepts only 'H' and 'L'.
PitchSequence PitchFromString(std::string_view text);

// Parses a single phrase label such as "セ[ーコーシテ]モ".
AccentPhrase ParsePhrase(std::string_view label);

// Best-effort parse for malformed model output. Every rule violation is
// appended to `violations`; returns nullopt only when no mora survives.
std::optional<AccentPhrase> ParsePhraseLenient(
    std::string_view label, std::vector<LabelError>& violations);

std::string SerializePhrase(const AccentPhrase& phrase);

// Tokyo-dialect pitch of each mora.
PitchSequence AccentToPitch(const AccentPhrase& phrase);

// Inverse of AccentToPitch. Flat and tail-high phrases share the pitch
// L H...H inside the phrase; that pattern decodes as flat.
// Accent index for a pitch sequence alone.
int AccentFromPitch(std::span<const Pitch> pitch);

AccentPhrase PitchToAccent(MoraSequence moras, std::span<const Pitch> pitch);

}  // namespace accent_forge

#endif  // ACCENT_FORGE_ACCENT_PHRASE_H_

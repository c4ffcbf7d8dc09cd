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

#ifndef ACCENT_FORGE_DECODER_H_
#define ACCENT_FORGE_DECODER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accent_forge/accent_phrase.h"
#include "accent_forge/lexicon.h"
#include "accent_forge/utterance.h"

namespace accent_forge {

enum class ClampPolicy { kClampAndFlag };
enum class UncorrectablePolicy { kPassThroughAndFlag };

struct CorrectionConfig {
  // Upper bound for BestPathExhaustive. The DP search ignores it.
  std::uint64_t max_enumerated_paths = 4096;
  ClampPolicy clamp_policy = ClampPolicy::kClampAndFlag;
  UncorrectablePolicy uncorrectable_policy =
      UncorrectablePolicy::kPassThroughAndFlag;
};

struct PathChoice {
  MoraSequence pronunciation;
  int edit_cost = 0;
  // Chosen arc index within each span group.
  std::vector<std::size_t> arcs;
};

// Lattice path closest to `predicted` in mora edit distance. Runs a DP over
// (lattice node, predicted prefix), so the cost is linear in the number of
// arcs rather than in the number of paths. Among equal-cost paths the
// lexicographically smallest arc sequence wins. Throws LabelError if the
// lattice is uncorrectable.
PathChoice BestPath(const PronLattice& lattice, std::span<const Mora> predicted,
                    const CorrectionConfig& config = {});

// Same contract as BestPath, by explicit enumeration. Throws if the lattice
// has more than config.max_enumerated_paths paths.
PathChoice BestPathExhaustive(const PronLattice& lattice,
                              std::span<const Mora> predicted,
                              const CorrectionConfig& config = {});

struct RestoredAccent {
  int accent = 0;
  bool clamped = false;

  friend bool operator==(const RestoredAccent&, const RestoredAccent&) =
      default;
};

// Moves the accent nucleus after a pronunciation changes from
// `original_moras` to `corrected_moras` moras. Flat, head-high and
// tail-high accents are kept; a middle-high nucleus keeps its distance from
// the phrase end. Results outside [0, corrected_moras] are clamped and
// flagged.
RestoredAccent RestoreAccent(int original_accent, int original_moras,
                             int corrected_moras);

enum class CorrectionStatus { kUnchanged, kCorrected, kUncorrectable, kAccentClamped };

std::string_view CorrectionStatusName(CorrectionStatus status);

struct PhraseHypothesis {
  std::string graphemes;
  AccentPhrase predicted;
};

struct CorrectionResult {
  AccentPhrase phrase;
  CorrectionStatus status;
  int edit_cost = 0;
};

// segment -> lattice -> best path -> accent restoration. The prediction is
// passed through untouched when the lattice has no path.
CorrectionResult CorrectPhrase(const PhraseHypothesis& hypothesis,
                               const Lexicon& lexicon,
                               const CorrectionConfig& config = {});

struct UtteranceCorrection {
  UtteranceAnnotation annotation;
  // One entry per phrase, pauses excluded.
  std::vector<CorrectionStatus> statuses;
};

// Corrects every phrase independently. Pauses, graphemes and phrase order
// are preserved. Throws LabelError(kMissingGraphemes) if a phrase has no
// graphemes.
UtteranceCorrection CorrectUtterance(const UtteranceAnnotation& annotation,
                                     const Lexicon& lexicon,
                                     const CorrectionConfig& config = {});

}  // namespace accent_forge

#endif  // ACCENT_FORGE_DECODER_H_

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

#ifndef ACCENT_FORGE_METRICS_H_
#define ACCENT_FORGE_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accent_forge/edit_distance.h"
#include "accent_forge/utterance.h"

namespace accent_forge {

// Pooled edit counts. Corpus CER is total distance over total reference
// length, not a mean of per-utterance rates.
struct EditCounts {
  std::size_t distance = 0;
  std::size_t reference_length = 0;

  EditCounts& operator+=(const EditCounts& other) {
    distance += other.distance;
    reference_length += other.reference_length;
    return *this;
  }
  // Throws LabelError(kEmptyReference) when reference_length is 0.
  double Rate() const;
};

template <typename T>
EditCounts CerCounts(std::span<const T> reference, std::span<const T> hypothesis) {
  return {LevenshteinDistance(reference, hypothesis), reference.size()};
}

// Code-point level counts for UTF-8 text.
EditCounts CharacterCerCounts(std::string_view reference,
                              std::string_view hypothesis);

// Throws LabelError(kEmptyReference) for an empty reference.
double CharacterErrorRate(std::string_view reference,
                          std::string_view hypothesis);

struct BoundaryCounts {
  std::size_t correct = 0;
  std::size_t total = 0;

  BoundaryCounts& operator+=(const BoundaryCounts& other) {
    correct += other.correct;
    total += other.total;
    return *this;
  }
};

// A reference phrase is correct when the hypothesis has a phrase with the
// same [start, end) mora span. Spans are taken in each side's own mora
// sequence.
BoundaryCounts BoundaryAccuracy(const UtteranceAnnotation& reference,
                                const UtteranceAnnotation& hypothesis);

// Confusion counts with H as the positive class.
struct PitchCounts {
  std::size_t true_positive = 0;
  std::size_t false_positive = 0;
  std::size_t false_negative = 0;
  std::size_t true_negative = 0;

  PitchCounts& operator+=(const PitchCounts& other) {
    true_positive += other.true_positive;
    false_positive += other.false_positive;
    false_negative += other.false_negative;
    true_negative += other.true_negative;
    return *this;
  }
  // 1.0 when neither side has an H.
  double F1() const;
};

// Throws LabelError(kLengthMismatch) when lengths differ.
PitchCounts PitchConfusion(std::span<const Pitch> reference,
                           std::span<const Pitch> hypothesis);

struct EvalPair {
  std::string id;
  UtteranceAnnotation reference;
  UtteranceAnnotation hypothesis;
};

// Micro-averaged F1 over all moras of all pairs.
double PitchF1(std::span<const EvalPair> pairs);

enum class FilterMode { kIntersection, kPerSystem };
std::string_view FilterModeName(FilterMode mode);

using Corpus = std::map<std::string, UtteranceAnnotation>;

struct SystemCorpus {
  std::string name;
  Corpus utterances;
};

// Ids whose phonemes match the reference, one set per system. In
// intersection mode every system gets the ids all systems got right.
// Throws LabelError(kIdMismatch) if a system's ids differ from the
// reference's.
std::vector<std::set<std::string>> FilterPhonemeCorrect(
    const Corpus& reference, std::span<const SystemCorpus> systems,
    FilterMode mode);

struct ScoreCounts {
  std::size_t utterances_scored = 0;
  std::size_t utterances_filtered_out = 0;
  std::size_t reference_phrases = 0;
  std::size_t reference_moras = 0;
};

struct ScoreReport {
  std::string system;
  std::optional<double> cer_graphemes;
  std::optional<double> cer_phonemes;
  // Unset (not applicable) when the filter leaves no utterance.
  std::optional<double> boundary_accuracy;
  std::optional<double> pitch_f1;
  ScoreCounts counts;

  EditCounts grapheme_edits;
  EditCounts phoneme_edits;
  BoundaryCounts boundaries;
  PitchCounts pitch;
};

// Scores each system on the reference ids it covers. Prosodic metrics only
// use the ids returned by the filter; utterances missing from a system are
// never counted as phoneme-correct.
std::vector<ScoreReport> ScoreCorpus(const Corpus& reference,
                                     std::span<const SystemCorpus> systems,
                                     FilterMode mode);

}  // namespace accent_forge

#endif  // ACCENT_FORGE_METRICS_H_

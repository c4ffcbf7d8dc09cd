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

#include "accent_forge/metrics.h"

#include "accent_forge/utf8.h"

namespace accent_forge {

double EditCounts::Rate() const {
  if (reference_length == 0) {
    throw LabelError(ErrorCode::kEmptyReference,
                     "character error rate needs a non-empty reference");
  }
  return static_cast<double>(distance) / static_cast<double>(reference_length);
}

EditCounts CharacterCerCounts(std::string_view reference,
                              std::string_view hypothesis) {
  const std::u32string ref = utf8::Decode(reference);
  const std::u32string hyp = utf8::Decode(hypothesis);
  return CerCounts<char32_t>(ref, hyp);
}

double CharacterErrorRate(std::string_view reference,
                          std::string_view hypothesis) {
  return CharacterCerCounts(reference, hypothesis).Rate();
}

BoundaryCounts BoundaryAccuracy(const UtteranceAnnotation& reference,
                                const UtteranceAnnotation& hypothesis) {
  const auto ref_spans = reference.PhraseSpans();
  const auto hyp_spans = hypothesis.PhraseSpans();
  const std::set<std::pair<int, int>> predicted(hyp_spans.begin(),
                                                hyp_spans.end());
  BoundaryCounts counts;
  counts.total = ref_spans.size();
  for (const auto& span : ref_spans) {
    if (predicted.contains(span)) ++counts.correct;
  }
  return counts;
}

double PitchCounts::F1() const {
  const std::size_t errors = false_positive + false_negative;
  if (true_positive == 0) return errors == 0 ? 1.0 : 0.0;
  const double tp = static_cast<double>(true_positive);
  const double precision = tp / static_cast<double>(true_positive + false_positive);
  const double recall = tp / static_cast<double>(true_positive + false_negative);
  return 2.0 * precision * recall / (precision + recall);
}

PitchCounts PitchConfusion(std::span<const Pitch> reference,
                           std::span<const Pitch> hypothesis) {
  if (reference.size() != hypothesis.size()) {
    throw LabelError(ErrorCode::kLengthMismatch,
                     "pitch sequences of " + std::to_string(reference.size()) +
                         " and " + std::to_string(hypothesis.size()) +
                         " moras");
  }
  PitchCounts counts;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const bool ref_high = reference[i] == Pitch::kHigh;
    const bool hyp_high = hypothesis[i] == Pitch::kHigh;
    if (ref_high && hyp_high) {
      ++counts.true_positive;
    } else if (hyp_high) {
      ++counts.false_positive;
    } else if (ref_high) {
      ++counts.false_negative;
    } else {
      ++counts.true_negative;
    }
  }
  return counts;
}

double PitchF1(std::span<const EvalPair> pairs) {
  PitchCounts pooled;
  for (const EvalPair& pair : pairs) {
    pooled += PitchConfusion(pair.reference.Pitch(), pair.hypothesis.Pitch());
  }
  return pooled.F1();
}

std::string_view FilterModeName(FilterMode mode) {
  return mode == FilterMode::kIntersection ? "intersection" : "per-system";
}

namespace {

std::set<std::string> CorrectIds(const Corpus& reference,
                                 const SystemCorpus& system) {
  std::set<std::string> ids;
  for (const auto& [id, ref] : reference) {
    auto it = system.utterances.find(id);
    if (it != system.utterances.end() &&
        it->second.Phonemes() == ref.Phonemes()) {
      ids.insert(id);
    }
  }
  return ids;
}

std::vector<std::set<std::string>> Filter(const Corpus& reference,
                                          std::span<const SystemCorpus> systems,
                                          FilterMode mode) {
  std::vector<std::set<std::string>> sets;
  for (const SystemCorpus& system : systems) {
    sets.push_back(CorrectIds(reference, system));
  }
  if (mode == FilterMode::kIntersection && !sets.empty()) {
    std::set<std::string> shared = sets.front();
    for (const auto& s : sets) {
      std::erase_if(shared, [&](const std::string& id) { return !s.contains(id); });
    }
    for (auto& s : sets) s = shared;
  }
  return sets;
}

}  // namespace

std::vector<std::set<std::string>> FilterPhonemeCorrect(
    const Corpus& reference, std::span<const SystemCorpus> systems,
    FilterMode mode) {
  for (const SystemCorpus& system : systems) {
    bool same = system.utterances.size() == reference.size();
    for (auto a = reference.begin(), b = system.utterances.begin();
         same && a != reference.end(); ++a, ++b) {
      same = a->first == b->first;
    }
    if (!same) {
      throw LabelError(ErrorCode::kIdMismatch,
                       "system '" + system.name +
                           "' does not cover the reference id set");
    }
  }
  return Filter(reference, systems, mode);
}

std::vector<ScoreReport> ScoreCorpus(const Corpus& reference,
                                     std::span<const SystemCorpus> systems,
                                     FilterMode mode) {
  const std::vector<std::set<std::string>> kept = Filter(reference, systems, mode);
  std::vector<ScoreReport> reports;
  for (std::size_t k = 0; k < systems.size(); ++k) {
    const SystemCorpus& system = systems[k];
    ScoreReport report;
    report.system = system.name;
    for (const auto& [id, ref] : reference) {
      auto it = system.utterances.find(id);
      if (it == system.utterances.end()) continue;
      const UtteranceAnnotation& hyp = it->second;
      ++report.counts.utterances_scored;
      report.phoneme_edits += CharacterCerCounts(ref.Phonemes(), hyp.Phonemes());
      if (ref.has_graphemes() && hyp.has_graphemes()) {
        report.grapheme_edits +=
            CharacterCerCounts(ref.Graphemes(), hyp.Graphemes());
      }
      if (!kept[k].contains(id)) continue;
      report.boundaries += BoundaryAccuracy(ref, hyp);
      report.pitch += PitchConfusion(ref.Pitch(), hyp.Pitch());
      report.counts.reference_phrases += ref.phrase_count();
      report.counts.reference_moras += ref.Moras().size();
    }
    const std::size_t evaluated = kept[k].size();
    report.counts.utterances_filtered_out =
        report.counts.utterances_scored - evaluated;
    if (report.phoneme_edits.reference_length > 0) {
      report.cer_phonemes = report.phoneme_edits.Rate();
    }
    if (report.grapheme_edits.reference_length > 0) {
      report.cer_graphemes = report.grapheme_edits.Rate();
    }
    if (evaluated > 0) {
      if (report.boundaries.total > 0) {
        report.boundary_accuracy =
            static_cast<double>(report.boundaries.correct) /
            static_cast<double>(report.boundaries.total);
      }
      report.pitch_f1 = report.pitch.F1();
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace accent_forge

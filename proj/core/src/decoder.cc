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

#include "accent_forge/decoder.h"

#include <algorithm>
#include <limits>

#include "accent_forge/edit_distance.h"

namespace accent_forge {

namespace {

using Row = std::vector<int>;

// Extends alignments ending at `row` (row[j]: best cost of matching the path
// so far against the first j predicted moras) across one more arc.
Row Extend(const Row& row, std::span<const Mora> arc,
           std::span<const Mora> predicted) {
  Row current = row;
  Row next(row.size());
  for (const Mora& mora : arc) {
    next[0] = current[0] + 1;
    for (std::size_t j = 1; j < row.size(); ++j) {
      const int substitute = current[j - 1] + (mora == predicted[j - 1] ? 0 : 1);
      next[j] = std::min({current[j] + 1, next[j - 1] + 1, substitute});
    }
    std::swap(current, next);
  }
  return current;
}

Row InitialRow(std::size_t predicted_size) {
  Row row(predicted_size + 1);
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = static_cast<int>(j);
  return row;
}

void ElementwiseMin(Row& into, const Row& other) {
  for (std::size_t j = 0; j < into.size(); ++j) {
    into[j] = std::min(into[j], other[j]);
  }
}

void RequireCorrectable(const PronLattice& lattice) {
  if (lattice.uncorrectable()) {
    throw LabelError(ErrorCode::kInvalidArgument,
                     "lattice has a span without candidate pronunciations");
  }
}

}  // namespace

PathChoice BestPath(const PronLattice& lattice, std::span<const Mora> predicted,
                    const CorrectionConfig&) {
  RequireCorrectable(lattice);
  const auto& groups = lattice.groups();
  const std::size_t spans = groups.size();
  const std::size_t p = predicted.size();

  // suffix[s][i]: cheapest alignment of any path through spans s.. against
  // the last i predicted moras, computed on reversed sequences.
  MoraSequence reversed_predicted(predicted.rbegin(), predicted.rend());
  std::vector<Row> suffix(spans + 1);
  suffix[spans] = InitialRow(p);
  for (std::size_t s = spans; s-- > 0;) {
    Row best(p + 1, std::numeric_limits<int>::max());
    for (const MoraSequence& arc : groups[s]) {
      MoraSequence reversed_arc(arc.rbegin(), arc.rend());
      ElementwiseMin(best, Extend(suffix[s + 1], reversed_arc,
                                  reversed_predicted));
    }
    suffix[s] = std::move(best);
  }
  const int optimum = suffix[0][p];

  auto completion = [&](const Row& prefix, std::size_t node) {
    int best = std::numeric_limits<int>::max();
    for (std::size_t j = 0; j <= p; ++j) {
      best = std::min(best, prefix[j] + suffix[node][p - j]);
    }
    return best;
  };

  // Walk forward taking the first arc that can still reach the optimum.
  PathChoice choice;
  choice.edit_cost = optimum;
  Row prefix = InitialRow(p);
  for (std::size_t s = 0; s < spans; ++s) {
    for (std::size_t a = 0; a < groups[s].size(); ++a) {
      Row extended = Extend(prefix, groups[s][a], predicted);
      if (completion(extended, s + 1) == optimum) {
        choice.arcs.push_back(a);
        choice.pronunciation.insert(choice.pronunciation.end(),
                                    groups[s][a].begin(), groups[s][a].end());
        prefix = std::move(extended);
        break;
      }
    }
  }
  return choice;
}

PathChoice BestPathExhaustive(const PronLattice& lattice,
                              std::span<const Mora> predicted,
                              const CorrectionConfig& config) {
  RequireCorrectable(lattice);
  const std::vector<MoraSequence> paths =
      lattice.EnumeratePaths(config.max_enumerated_paths);
  std::size_t best_index = 0;
  int best_cost = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const int cost = MoraEditDistance(paths[i], predicted);
    if (cost < best_cost) {
      best_cost = cost;
      best_index = i;
    }
  }
  PathChoice choice;
  choice.pronunciation = paths[best_index];
  choice.edit_cost = best_cost;
  // Paths are enumerated in mixed-radix order over the arc groups.
  std::size_t rest = best_index;
  const auto& groups = lattice.groups();
  choice.arcs.assign(groups.size(), 0);
  for (std::size_t s = groups.size(); s-- > 0;) {
    choice.arcs[s] = rest % groups[s].size();
    rest /= groups[s].size();
  }
  return choice;
}

RestoredAccent RestoreAccent(int original_accent, int original_moras,
                             int corrected_moras) {
  if (original_moras < 1 || corrected_moras < 1 || original_accent < 0 ||
      original_accent > original_moras) {
    throw LabelError(ErrorCode::kInvalidArgument,
                     "restore_accent precondition violated: accent " +
                         std::to_string(original_accent) + ", moras " +
                         std::to_string(original_moras) + " -> " +
                         std::to_string(corrected_moras));
  }
  int accent = original_accent;
  const bool keep = corrected_moras == original_moras || original_accent == 0 ||
                    original_accent == 1 || original_accent == original_moras;
  if (!keep) accent = original_accent + (corrected_moras - original_moras);
  if (accent < 0 || accent > corrected_moras) {
    return {std::clamp(accent, 0, corrected_moras), true};
  }
  return {accent, false};
}

std::string_view CorrectionStatusName(CorrectionStatus status) {
  switch (status) {
    case CorrectionStatus::kUnchanged: return "unchanged";
    case CorrectionStatus::kCorrected: return "corrected";
    case CorrectionStatus::kUncorrectable: return "uncorrectable";
    case CorrectionStatus::kAccentClamped: return "accent_clamped";
  }
  return "unknown";
}

CorrectionResult CorrectPhrase(const PhraseHypothesis& hypothesis,
                               const Lexicon& lexicon,
                               const CorrectionConfig& config) {
  if (hypothesis.graphemes.empty()) {
    throw LabelError(ErrorCode::kEmptyGraphemes, "empty graphemes");
  }
  const PronLattice lattice = BuildLattice(Segment(hypothesis.graphemes, lexicon));
  const AccentPhrase& predicted = hypothesis.predicted;
  if (lattice.uncorrectable()) {
    return {predicted, CorrectionStatus::kUncorrectable, 0};
  }
  PathChoice choice = BestPath(lattice, predicted.moras(), config);
  if (choice.edit_cost == 0) {
    return {predicted, CorrectionStatus::kUnchanged, 0};
  }
  const int corrected_moras = static_cast<int>(choice.pronunciation.size());
  const RestoredAccent restored =
      RestoreAccent(predicted.accent(), predicted.size(), corrected_moras);
  return {AccentPhrase(std::move(choice.pronunciation), restored.accent),
          restored.clamped ? CorrectionStatus::kAccentClamped
                           : CorrectionStatus::kCorrected,
          choice.edit_cost};
}

UtteranceCorrection CorrectUtterance(const UtteranceAnnotation& annotation,
                                     const Lexicon& lexicon,
                                     const CorrectionConfig& config) {
  UtteranceCorrection out;
  std::vector<UtteranceItem> items;
  items.reserve(annotation.items().size());
  std::size_t phrase_index = 0;
  for (const UtteranceItem& item : annotation.items()) {
    const auto* phrase = std::get_if<PhraseItem>(&item);
    if (phrase == nullptr) {
      items.push_back(item);
      continue;
    }
    ++phrase_index;
    if (!phrase->graphemes) {
      throw LabelError(ErrorCode::kMissingGraphemes,
                       "phrase has no graphemes to correct against",
                       phrase_index);
    }
    CorrectionResult result =
        CorrectPhrase({*phrase->graphemes, phrase->phrase}, lexicon, config);
    out.statuses.push_back(result.status);
    items.emplace_back(PhraseItem{phrase->graphemes, std::move(result.phrase)});
  }
  out.annotation = UtteranceAnnotation(std::move(items));
  return out;
}

}  // namespace accent_forge

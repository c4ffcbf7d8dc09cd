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

#ifndef ACCENT_FORGE_CORPUS_H_
#define ACCENT_FORGE_CORPUS_H_

#include <array>
#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accent_forge/decoder.h"
#include "accent_forge/metrics.h"
#include "accent_forge/symbol_codec.h"

namespace accent_forge {

enum class SymbolOption { kAuto, kDisplay, kInterchange };

// One JSONL line: {"id", "transcript", "labels"} plus, after correction,
// "status" (one entry per phrase) and "corrected".
struct Record {
  std::string id;
  std::string transcript;
  std::string labels;
  std::optional<std::vector<std::string>> status;
  std::optional<std::string> corrected;
};

// Throws LabelError(kInvalidArgument) on malformed JSON or missing fields.
Record ParseRecord(std::string_view line);
// Compact single-line JSON with keys in the order above.
std::string SerializeRecord(const Record& record);

struct DecodedLabels {
  UtteranceAnnotation annotation;
  SymbolMode mode = SymbolMode::kDisplay;
  std::vector<LabelError> violations;
};

// Resolves the symbol mode, maps to display symbols and parses. Graphemes
// are expected iff the stream contains the delimiter.
DecodedLabels DecodeLabels(std::string_view labels, SymbolOption symbols,
                           bool strict);
std::string EncodeLabels(const UtteranceAnnotation& annotation, SymbolMode mode);

// Splits a stream into lines, dropping a trailing '\r' from each.
std::vector<std::string> ReadLines(std::istream& in);

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void ParallelFor(std::size_t count, int jobs,
                 const std::function<void(std::size_t)>& fn);

struct CorrectOptions {
  SymbolOption symbols = SymbolOption::kAuto;
  bool strict = true;
  int jobs = 1;
  CorrectionConfig config;
};

struct CorrectedLine {
  std::size_t line_number = 0;
  // Absent when the line was skipped.
  std::optional<std::string> output;
  std::vector<std::string> diagnostics;
  std::vector<CorrectionStatus> statuses;
};

struct CorrectionSummary {
  std::size_t records = 0;
  std::size_t skipped = 0;
  std::size_t phrases = 0;
  // Indexed by CorrectionStatus.
  std::array<std::size_t, 4> by_status{};

  std::string ToString() const;
};

struct CorrectionRun {
  std::vector<CorrectedLine> lines;
  CorrectionSummary summary;
};

// Corrects a hypothesis JSONL stream line by line. Output order follows
// input order for any number of jobs. Blank lines are ignored.
CorrectionRun CorrectRecords(std::span<const std::string> lines,
                             const Lexicon& lexicon,
                             const CorrectOptions& options);

enum class LabelField { kAuto, kLabels, kCorrected };

struct LoadedCorpus {
  Corpus utterances;
  std::vector<std::string> diagnostics;
};

// Parses a JSONL corpus. Bad lines are reported and left out. kAuto reads
// "corrected" when present and "labels" otherwise.
LoadedCorpus LoadCorpus(std::span<const std::string> lines,
                        SymbolOption symbols, LabelField field, bool strict);

// Machine-readable report; ratios rounded to 4 decimals, N/A as null.
std::string RenderReportJson(std::span<const ScoreReport> reports,
                             FilterMode mode);
// Aligned text table, ratios to 4 decimals.
std::string RenderReportTable(std::span<const ScoreReport> reports,
                              FilterMode mode);

}  // namespace accent_forge

#endif  // ACCENT_FORGE_CORPUS_H_

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

#include "accent_forge/corpus.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include <json.hpp>

namespace accent_forge {

using json = nlohmann::ordered_json;

namespace {

std::string RequireString(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string()) {
    throw LabelError(ErrorCode::kInvalidArgument,
                     std::string("missing string field \"") + key + "\"");
  }
  return it->get<std::string>();
}

}  // namespace

Record ParseRecord(std::string_view line) {
  json object;
  try {
    object = json::parse(line);
  } catch (const json::parse_error& e) {
    throw LabelError(ErrorCode::kInvalidArgument,
                     std::string("malformed JSON: ") + e.what());
  }
  if (!object.is_object()) {
    throw LabelError(ErrorCode::kInvalidArgument, "JSONL line is not an object");
  }
  Record record;
  record.id = RequireString(object, "id");
  record.labels = RequireString(object, "labels");
  if (auto it = object.find("transcript"); it != object.end()) {
    if (!it->is_string()) {
      throw LabelError(ErrorCode::kInvalidArgument,
                       "field \"transcript\" is not a string");
    }
    record.transcript = it->get<std::string>();
  }
  if (auto it = object.find("status"); it != object.end()) {
    try {
      record.status = it->get<std::vector<std::string>>();
    } catch (const json::exception&) {
      throw LabelError(ErrorCode::kInvalidArgument,
                       "field \"status\" is not a list of strings");
    }
  }
  if (auto it = object.find("corrected"); it != object.end()) {
    if (!it->is_string()) {
      throw LabelError(ErrorCode::kInvalidArgument,
                       "field \"corrected\" is not a string");
    }
    record.corrected = it->get<std::string>();
  }
  return record;
}

std::string SerializeRecord(const Record& record) {
  json object;
  object["id"] = record.id;
  object["transcript"] = record.transcript;
  object["labels"] = record.labels;
  if (record.status) object["status"] = *record.status;
  if (record.corrected) object["corrected"] = *record.corrected;
  return object.dump();
}

DecodedLabels DecodeLabels(std::string_view labels, SymbolOption symbols,
                           bool strict) {
  DecodedLabels out;
  switch (symbols) {
    case SymbolOption::kAuto: out.mode = DetectSymbolMode(labels); break;
    case SymbolOption::kDisplay: out.mode = SymbolMode::kDisplay; break;
    case SymbolOption::kInterchange: out.mode = SymbolMode::kInterchange; break;
  }
  const std::string display = out.mode == SymbolMode::kInterchange
                                  ? DecodeSymbols(labels)
                                  : std::string(labels);
  ParseOptions options;
  options.with_graphemes = HasGraphemeDelimiter(display);
  options.strict = strict;
  UtteranceParse parsed = ParseUtterance(display, options);
  out.annotation = std::move(parsed.annotation);
  out.violations = std::move(parsed.violations);
  return out;
}

std::string EncodeLabels(const UtteranceAnnotation& annotation,
                         SymbolMode mode) {
  std::string text = annotation.Serialize();
  return mode == SymbolMode::kInterchange ? EncodeSymbols(text) : text;
}

std::vector<std::string> ReadLines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

void ParallelFor(std::size_t count, int jobs,
                 const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

std::string CorrectionSummary::ToString() const {
  std::string out = "records=" + std::to_string(records) +
                    " skipped=" + std::to_string(skipped) +
                    " phrases=" + std::to_string(phrases);
  for (std::size_t s = 0; s < by_status.size(); ++s) {
    out += " ";
    out += CorrectionStatusName(static_cast<CorrectionStatus>(s));
    out += "=" + std::to_string(by_status[s]);
  }
  return out;
}

namespace {

std::string Located(std::size_t line_number, const std::string& id,
                    const std::string& message) {
  std::string out = "line " + std::to_string(line_number);
  if (!id.empty()) out += " (id " + id + ")";
  return out + ": " + message;
}

CorrectedLine CorrectLine(std::size_t line_number, const std::string& line,
                          const Lexicon& lexicon,
                          const CorrectOptions& options) {
  CorrectedLine out;
  out.line_number = line_number;
  std::string id;
  try {
    Record record = ParseRecord(line);
    id = record.id;
    DecodedLabels decoded =
        DecodeLabels(record.labels, options.symbols, options.strict);
    for (const LabelError& v : decoded.violations) {
      out.diagnostics.push_back(Located(line_number, id, v.what()));
    }
    UtteranceCorrection corrected =
        CorrectUtterance(decoded.annotation, lexicon, options.config);
    record.status.emplace();
    for (CorrectionStatus s : corrected.statuses) {
      record.status->emplace_back(CorrectionStatusName(s));
    }
    record.corrected = EncodeLabels(corrected.annotation, decoded.mode);
    out.statuses = std::move(corrected.statuses);
    out.output = SerializeRecord(record);
  } catch (const LabelError& e) {
    out.diagnostics.push_back(Located(line_number, id, e.what()));
    out.output.reset();
  }
  return out;
}

}  // namespace

CorrectionRun CorrectRecords(std::span<const std::string> lines,
                             const Lexicon& lexicon,
                             const CorrectOptions& options) {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") != std::string::npos) {
      indices.push_back(i);
    }
  }
  CorrectionRun run;
  run.lines.resize(indices.size());
  ParallelFor(indices.size(), options.jobs, [&](std::size_t k) {
    run.lines[k] = CorrectLine(indices[k] + 1, lines[indices[k]], lexicon, options);
  });
  for (const CorrectedLine& line : run.lines) {
    ++run.summary.records;
    if (!line.output) {
      ++run.summary.skipped;
      continue;
    }
    run.summary.phrases += line.statuses.size();
    for (CorrectionStatus s : line.statuses) {
      ++run.summary.by_status[static_cast<std::size_t>(s)];
    }
  }
  return run;
}

LoadedCorpus LoadCorpus(std::span<const std::string> lines,
                        SymbolOption symbols, LabelField field, bool strict) {
  LoadedCorpus out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") == std::string::npos) continue;
    std::string id;
    try {
      Record record = ParseRecord(lines[i]);
      id = record.id;
      std::string labels = record.labels;
      if (field == LabelField::kCorrected ||
          (field == LabelField::kAuto && record.corrected)) {
        if (!record.corrected) {
          throw LabelError(ErrorCode::kInvalidArgument,
                           "missing string field \"corrected\"");
        }
        labels = *record.corrected;
      }
      DecodedLabels decoded = DecodeLabels(labels, symbols, strict);
      for (const LabelError& v : decoded.violations) {
        out.diagnostics.push_back(Located(i + 1, id, v.what()));
      }
      if (!out.utterances.emplace(id, std::move(decoded.annotation)).second) {
        out.diagnostics.push_back(
            Located(i + 1, id, "duplicate id; keeping the first occurrence"));
      }
    } catch (const LabelError& e) {
      out.diagnostics.push_back(Located(i + 1, id, e.what()));
    }
  }
  return out;
}

namespace {

json Ratio(const std::optional<double>& value) {
  if (!value) return nullptr;
  return std::round(*value * 10000.0) / 10000.0;
}

std::string FormatRatio(const std::optional<double>& value) {
  if (!value) return "n/a";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", *value);
  return buffer;
}

}  // namespace

std::string RenderReportJson(std::span<const ScoreReport> reports,
                             FilterMode mode) {
  json doc;
  doc["positive_class"] = "H";
  doc["averaging"] = "micro";
  doc["filter"] = FilterModeName(mode);
  doc["systems"] = json::array();
  for (const ScoreReport& r : reports) {
    json s;
    s["system"] = r.system;
    s["cer_phonemes"] = Ratio(r.cer_phonemes);
    s["cer_graphemes"] = Ratio(r.cer_graphemes);
    s["boundary_accuracy"] = Ratio(r.boundary_accuracy);
    s["pitch_f1"] = Ratio(r.pitch_f1);
    s["counts"] = {
        {"utterances_scored", r.counts.utterances_scored},
        {"utterances_filtered_out", r.counts.utterances_filtered_out},
        {"reference_phrases", r.counts.reference_phrases},
        {"reference_moras", r.counts.reference_moras},
    };
    doc["systems"].push_back(std::move(s));
  }
  return doc.dump(2) + "\n";
}

std::string RenderReportTable(std::span<const ScoreReport> reports,
                              FilterMode mode) {
  std::size_t name_width = 5;
  for (const ScoreReport& r : reports) {
    name_width = std::max(name_width, r.system.size());
  }
  std::string out = "# filter: ";
  out += FilterModeName(mode);
  out += "; averaging: micro; F1 positive class: H\n";
  out += "# CER: lower is better; Acc. and F1: higher is better\n";
  char line[512];
  std::snprintf(line, sizeof(line), "%-*s  %8s  %8s  %8s  %9s  %7s  %8s  %8s  %8s\n",
                static_cast<int>(name_width), "Model", "CER", "Acc.", "F1",
                "CER-graph", "scored", "filtered", "phrases", "moras");
  out += line;
  for (const ScoreReport& r : reports) {
    std::snprintf(line, sizeof(line),
                  "%-*s  %8s  %8s  %8s  %9s  %7zu  %8zu  %8zu  %8zu\n",
                  static_cast<int>(name_width), r.system.c_str(),
                  FormatRatio(r.cer_phonemes).c_str(),
                  FormatRatio(r.boundary_accuracy).c_str(),
                  FormatRatio(r.pitch_f1).c_str(),
                  FormatRatio(r.cer_graphemes).c_str(),
                  r.counts.utterances_scored, r.counts.utterances_filtered_out,
                  r.counts.reference_phrases, r.counts.reference_moras);
    out += line;
  }
  return out;
}

}  // namespace accent_forge

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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "accent_forge/corpus.h"
#include "accent_forge/lexicon.h"
#include "accent_forge/utterance.h"

namespace accent_forge::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Target { kPitch, kAccent, kPhonemes, kEncode, kDecode };

struct RunConfig {
  std::string input;
  std::vector<std::string> hypotheses;
  std::string output;
  std::string lexicon;
  std::string report;
  std::string format = "table";
  SymbolOption symbols = SymbolOption::kAuto;
  FilterMode filter = FilterMode::kIntersection;
  LabelField field = LabelField::kAuto;
  Target target = Target::kPitch;
  int jobs = 1;
  bool strict = true;
  std::uint64_t max_enumerated_paths = CorrectionConfig{}.max_enumerated_paths;
};

std::vector<std::string> ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") return ReadLines(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  return ReadLines(file);
}

// Writes to `path`, or to `out` when no path is given.
void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

bool IsJsonLine(const std::string& line) {
  const auto first = line.find_first_not_of(" \t");
  return first != std::string::npos && line[first] == '{';
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

// Label text of a plain or JSONL line; `id` is set for JSONL.
std::string LabelsOf(const std::string& line, std::string& id) {
  if (!IsJsonLine(line)) return line;
  Record record = ParseRecord(line);
  id = record.id;
  return record.labels;
}

std::string Where(std::size_t line_number, const std::string& id) {
  std::string out = "line " + std::to_string(line_number);
  if (!id.empty()) out += " (id " + id + ")";
  return out;
}

int Validate(const RunConfig& config, std::istream& in, std::ostream& out) {
  const std::vector<std::string> lines = ReadInput(config.input, in);
  std::size_t checked = 0;
  std::size_t invalid = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (IsBlank(lines[i])) continue;
    ++checked;
    std::string id;
    try {
      DecodedLabels decoded =
          DecodeLabels(LabelsOf(lines[i], id), config.symbols, config.strict);
      out << Where(i + 1, id) << ": ok, "
          << decoded.annotation.phrase_count() << " phrases";
      if (!decoded.violations.empty()) {
        out << ", " << decoded.violations.size() << " violations";
      }
      out << "\n";
      for (const LabelError& v : decoded.violations) {
        out << "  warning: [" << ErrorCodeName(v.code()) << "] " << v.what()
            << "\n";
      }
    } catch (const LabelError& e) {
      ++invalid;
      out << Where(i + 1, id) << ": error: [" << ErrorCodeName(e.code())
          << "] " << e.what() << "\n";
    }
  }
  out << checked << " lines, " << checked - invalid << " valid, " << invalid
      << " invalid\n";
  return invalid == 0 ? kExitOk : kExitErrors;
}

std::string ConvertOne(const std::string& labels, const RunConfig& config) {
  if (config.target == Target::kEncode) {
    DecodeLabels(labels, SymbolOption::kDisplay, true);
    return EncodeSymbols(labels);
  }
  if (config.target == Target::kDecode) {
    std::string display = DecodeSymbols(labels);
    DecodeLabels(display, SymbolOption::kDisplay, true);
    return display;
  }
  const UtteranceAnnotation annotation =
      DecodeLabels(labels, config.symbols, true).annotation;
  std::string result;
  auto separate = [&](const char* sep) {
    if (!result.empty()) result += sep;
  };
  for (const UtteranceItem& item : annotation.items()) {
    const auto* phrase = std::get_if<PhraseItem>(&item);
    if (config.target == Target::kPhonemes) {
      if (phrase) result += phrase->phrase.Pronunciation();
      continue;
    }
    if (!phrase) {
      separate(config.target == Target::kAccent ? " " : " # ");
      result += "_";
      continue;
    }
    if (config.target == Target::kAccent) {
      separate(" ");
      result += phrase->phrase.Pronunciation() + ":" +
                std::to_string(phrase->phrase.accent());
      continue;
    }
    separate(" # ");
    const PitchSequence pitch = AccentToPitch(phrase->phrase);
    for (std::size_t m = 0; m < pitch.size(); ++m) {
      if (m > 0) result += " ";
      result += phrase->phrase.moras()[m].text();
      result += ":";
      result += static_cast<char>(pitch[m]);
    }
  }
  return result;
}

int Convert(const RunConfig& config, std::istream& in, std::ostream& out,
            std::ostream& err) {
  const std::vector<std::string> lines = ReadInput(config.input, in);
  std::string text;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string id;
    try {
      text += ConvertOne(LabelsOf(lines[i], id), config);
    } catch (const LabelError& e) {
      ++failures;
      err << Where(i + 1, id) << ": error: " << e.what() << "\n";
    }
    text += "\n";
  }
  WriteOutput(config.output, text, out);
  return failures == 0 ? kExitOk : kExitErrors;
}

Lexicon ResolveLexicon(const RunConfig& config) {
  std::string path = config.lexicon;
  if (path.empty()) {
    if (const char* env = std::getenv(kLexiconEnv)) path = env;
  }
  if (path.empty()) {
    throw UsageError(std::string("no lexicon: pass --lexicon or set ") +
                     kLexiconEnv);
  }
  if (!std::filesystem::exists(path)) {
    throw UsageError("lexicon '" + path + "' does not exist");
  }
  return LoadLexiconFile(path);
}

int Correct(const RunConfig& config, std::istream& in, std::ostream& out,
            std::ostream& err) {
  const Lexicon lexicon = ResolveLexicon(config);
  const std::vector<std::string> lines = ReadInput(config.input, in);
  CorrectOptions options;
  options.symbols = config.symbols;
  options.strict = config.strict;
  options.jobs = config.jobs;
  options.config.max_enumerated_paths = config.max_enumerated_paths;
  const CorrectionRun run = CorrectRecords(lines, lexicon, options);
  std::string text;
  for (const CorrectedLine& line : run.lines) {
    for (const std::string& d : line.diagnostics) err << d << "\n";
    if (line.output) text += *line.output + "\n";
  }
  WriteOutput(config.output, text, out);
  err << "summary: " << run.summary.ToString() << "\n";
  return run.summary.skipped == 0 ? kExitOk : kExitErrors;
}

// "name=path" names a system explicitly; otherwise the file stem is used.
std::pair<std::string, std::string> SystemSpec(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq != std::string::npos && eq > 0) {
    return {arg.substr(0, eq), arg.substr(eq + 1)};
  }
  if (arg == "-") return {"stdin", arg};
  return {std::filesystem::path(arg).stem().string(), arg};
}

int Score(const RunConfig& config, std::istream& in, std::ostream& out,
          std::ostream& err) {
  std::size_t problems = 0;
  auto report_diagnostics = [&](const std::string& name,
                                const LoadedCorpus& corpus) {
    for (const std::string& d : corpus.diagnostics) {
      err << name << ": " << d << "\n";
    }
    problems += corpus.diagnostics.size();
  };
  const LoadedCorpus reference =
      LoadCorpus(ReadInput(config.input, in), config.symbols,
                 LabelField::kLabels, config.strict);
  report_diagnostics("reference", reference);

  std::vector<SystemCorpus> systems;
  for (const std::string& arg : config.hypotheses) {
    auto [name, path] = SystemSpec(arg);
    LoadedCorpus corpus = LoadCorpus(ReadInput(path, in), config.symbols,
                                     config.field, config.strict);
    report_diagnostics(name, corpus);
    for (const auto& [id, _] : reference.utterances) {
      if (!corpus.utterances.contains(id)) {
        err << name << ": missing id " << id << "\n";
        ++problems;
      }
    }
    systems.push_back({name, std::move(corpus.utterances)});
  }

  const std::vector<ScoreReport> reports =
      ScoreCorpus(reference.utterances, systems, config.filter);
  const std::string json = RenderReportJson(reports, config.filter);
  if (!config.report.empty()) WriteOutput(config.report, json, out);
  out << (config.format == "json" ? json
                                  : RenderReportTable(reports, config.filter));
  if (problems > 0) err << "warnings: " << problems << "\n";
  return problems == 0 ? kExitOk : kExitErrors;
}

void AddSymbols(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--symbols", config.symbols, "Label symbol set")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, SymbolOption>{
              {"auto", SymbolOption::kAuto},
              {"display", SymbolOption::kDisplay},
              {"interchange", SymbolOption::kInterchange}},
          CLI::ignore_case));
}

void AddStrict(CLI::App* cmd, RunConfig& config) {
  cmd->add_flag("--strict,!--lenient", config.strict,
                "Reject malformed labels (default); --strict=false or "
                "--lenient records violations and parses best-effort");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Japanese TTS label toolkit: validate, convert, correct and "
               "score phrase-level pitch-accent labels",
               "accent_forge"};
  app.require_subcommand(1);
  RunConfig config;

  CLI::App* validate = app.add_subcommand("validate", "Check label lines");
  validate->add_option("input", config.input, "Label file (plain or JSONL)")
      ->required();
  AddSymbols(validate, config);
  AddStrict(validate, config);

  CLI::App* convert =
      app.add_subcommand("convert", "Convert labels to another form");
  convert->add_option("input", config.input, "Label file (plain or JSONL)")
      ->required();
  convert->add_option("--target", config.target, "Output form")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Target>{{"pitch", Target::kPitch},
                                        {"accent", Target::kAccent},
                                        {"phonemes", Target::kPhonemes},
                                        {"encode", Target::kEncode},
                                        {"decode", Target::kDecode}},
          CLI::ignore_case));
  convert->add_option("-o,--output", config.output, "Output file");
  AddSymbols(convert, config);

  CLI::App* correct = app.add_subcommand(
      "correct", "Correct hypothesis pronunciations with a lexicon");
  correct->add_option("input", config.input, "Hypothesis JSONL, - for stdin")
      ->required();
  correct->add_option("--lexicon", config.lexicon,
                      std::string("Lexicon TSV (default: $") + kLexiconEnv +
                          ")");
  correct->add_option("-o,--output", config.output, "Corrected JSONL");
  correct->add_option("--jobs", config.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  correct->add_option("--max-enumerated-paths", config.max_enumerated_paths,
                      "Cap for exhaustive path enumeration")
      ->check(CLI::PositiveNumber);
  AddSymbols(correct, config);
  AddStrict(correct, config);

  CLI::App* score =
      app.add_subcommand("score", "Score hypotheses against a reference");
  score->add_option("reference", config.input, "Reference JSONL")->required();
  score->add_option("hypotheses", config.hypotheses,
                    "Hypothesis JSONL files, optionally NAME=PATH")
      ->required();
  score->add_option("--filter", config.filter,
                    "Utterances used for prosodic metrics")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, FilterMode>{
              {"intersection", FilterMode::kIntersection},
              {"per-system", FilterMode::kPerSystem}},
          CLI::ignore_case));
  score->add_option("--field", config.field,
                    "Hypothesis label field (auto prefers \"corrected\")")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, LabelField>{
              {"auto", LabelField::kAuto},
              {"labels", LabelField::kLabels},
              {"corrected", LabelField::kCorrected}},
          CLI::ignore_case));
  score->add_option("--report", config.report, "Write the JSON report here");
  score->add_option("--format", config.format, "Stdout format")
      ->check(CLI::IsMember({"table", "json"}));
  AddSymbols(score, config);
  AddStrict(score, config);

  std::vector<std::string> argv_rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(std::move(argv_rest));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return Validate(config, in, out);
    if (convert->parsed()) return Convert(config, in, out, err);
    if (correct->parsed()) return Correct(config, in, out, err);
    if (score->parsed()) return Score(config, in, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LabelError& e) {
    err << "error: " << e.what() << "\n";
    return kExitErrors;
  }
  return kExitUsage;
}

}  // namespace accent_forge::cli

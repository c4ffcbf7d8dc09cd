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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "synthetic_corpus.h"

namespace accent_forge::cli {
namespace {

namespace fs = std::filesystem;
using accent_forge::testing::JoinLines;
using accent_forge::testing::MakeSyntheticCorpus;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "accent_forge");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("accent_forge_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string Read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  std::string Path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kFisheryLexicon = "漁業\tギョギョー\nと\tト\n家\tイエ\nを\tオ\n";

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"convert", "x"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"validate", Path("missing.txt")}).code, kExitUsage);
  EXPECT_EQ(RunCli({"correct", "-", "--jobs", "0"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, ValidatePlainLines) {
  const std::string in = Write("labels.txt",
                               "セ[ーコーシテ]モ#シ[ナ]クテモ#\n"
                               "漁業と|ギョ]ギョート#\n\n"
                               "セ]ーコ[ー#\n");
  const Result r = RunCli({"validate", in});
  EXPECT_EQ(r.code, kExitErrors);
  EXPECT_NE(r.out.find("line 1: ok, 2 phrases"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("line 2: ok, 1 phrases"), std::string::npos);
  EXPECT_NE(r.out.find("line 4: error: [marker-order]"), std::string::npos);
  EXPECT_NE(r.out.find("3 lines, 2 valid, 1 invalid"), std::string::npos);
}

TEST_F(CliTest, LenientValidateAcceptsJsonl) {
  const std::string jsonl =
      R"({"id":"a","transcript":"t","labels":"家∣イ↑エ↓オ①"})" "\n"
      R"({"id":"b","transcript":"t","labels":"家∣エ↓オ↑①"})" "\n";
  const std::string in = Write("hyp.jsonl", jsonl);
  Result strict = RunCli({"validate", in});
  EXPECT_EQ(strict.code, kExitErrors);
  EXPECT_NE(strict.out.find("line 2 (id b): error"), std::string::npos) << strict.out;

  for (const char* flag : {"--strict=false", "--lenient"}) {
    const Result r = RunCli({"validate", flag, in});
    EXPECT_EQ(r.code, kExitOk) << flag << r.out;
    EXPECT_NE(r.out.find("line 2 (id b): ok, 1 phrases, 1 violations"),
              std::string::npos)
        << r.out;
  }
}

TEST_F(CliTest, ValidateReadsStdin) {
  const Result r = RunCli({"validate", "-"}, "ア[イ#\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("1 lines, 1 valid, 0 invalid"), std::string::npos);
}

TEST_F(CliTest, ConvertTargets) {
  const std::string in = Write("l.txt", "イ[エ]オ#_ア]#\n");
  Result r = RunCli({"convert", in, "--target", "pitch"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "イ:L エ:H オ:L # _ # ア:H\n");
  EXPECT_EQ(RunCli({"convert", in, "--target", "accent"}).out, "イエオ:2 _ ア:1\n");
  EXPECT_EQ(RunCli({"convert", in, "--target", "phonemes"}).out, "イエオア\n");
  r = RunCli({"convert", in, "--target", "encode"});
  EXPECT_EQ(r.out, "イ↑エ↓オ①③ア↓①\n");
  const std::string enc = Write("e.txt", r.out);
  EXPECT_EQ(RunCli({"convert", enc, "--target", "decode"}).out, "イ[エ]オ#_ア]#\n");

  const std::string bad = Write("bad.txt", "イ[エ]オ#\nア[[#\n");
  r = RunCli({"convert", bad, "--target", "phonemes", "-o", Path("out.txt")});
  EXPECT_EQ(r.code, kExitErrors);
  EXPECT_EQ(Read(Path("out.txt")), "イエオ\n\n");
}

TEST_F(CliTest, CorrectFixtures) {
  const std::string lex = Write("lex.tsv", kFisheryLexicon);
  const std::string hyp = Write(
      "hyp.jsonl",
      R"({"id":"r2","transcript":"漁業と","labels":"漁業と|ギョ]ーギョート#"})" "\n"
      R"({"id":"r3","transcript":"家を","labels":"家を∣エ↓オ①"})" "\n");
  const Result r = RunCli({"correct", hyp, "--lexicon", lex});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find(R"("corrected":"漁業と|ギョ]ギョート#")"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find(R"("corrected":"家を∣イ↓エオ①")"), std::string::npos) << r.out;
  EXPECT_NE(r.err.find("summary: records=2 skipped=0 phrases=2 unchanged=0 corrected=2"),
            std::string::npos)
      << r.err;
}

TEST_F(CliTest, CorrectUsesLexiconFromEnvironment) {
  const std::string lex = Write("lex.tsv", kFisheryLexicon);
  const std::string line =
      R"({"id":"r3","transcript":"家を","labels":"家を|エ]オ#"})" "\n";
  ::unsetenv(kLexiconEnv);
  EXPECT_EQ(RunCli({"correct", "-"}, line).code, kExitUsage);
  ::setenv(kLexiconEnv, lex.c_str(), 1);
  const Result r = RunCli({"correct", "-"}, line);
  ::unsetenv(kLexiconEnv);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("イ]エオ#"), std::string::npos);
}

TEST_F(CliTest, CorrectReportsBadLinesAndContinues) {
  const std::string lex = Write("lex.tsv", kFisheryLexicon);
  const Result r = RunCli(
      {"correct", "-", "--lexicon", lex, "-o", Path("out.jsonl")},
      "{broken\n" R"({"id":"r3","labels":"家を|エ]オ#"})" "\n");
  EXPECT_EQ(r.code, kExitErrors);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
  EXPECT_NE(Read(Path("out.jsonl")).find("イ]エオ#"), std::string::npos);
}

TEST_F(CliTest, NoLexiconHitsPassesEverythingThrough) {
  const auto corpus = MakeSyntheticCorpus(10, 5);
  const std::string lex = Write("lex.tsv", "# nothing useful\n犬\tイヌ\n");
  const Result r =
      RunCli({"correct", "-", "--lexicon", lex}, JoinLines(corpus.hypothesis_lines));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("unchanged=0 corrected=0"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("accent_clamped=0"), std::string::npos);
  // Each output record's corrected labels equal its input labels.
  std::istringstream lines(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    const std::string labels = line.substr(line.find("\"labels\":") + 9);
    const std::string corrected = line.substr(line.find("\"corrected\":") + 12);
    EXPECT_EQ(labels.substr(0, labels.find('"', 1)),
              corrected.substr(0, corrected.find('"', 1)));
    EXPECT_EQ(line.find("\"corrected\"]"), std::string::npos);
    ++n;
  }
  EXPECT_EQ(n, 10u);
}

TEST_F(CliTest, JobsProduceIdenticalBytes) {
  const auto corpus = MakeSyntheticCorpus(50, 11);
  const std::string lex = Write("lex.tsv", corpus.lexicon_tsv);
  const std::string hyp = Write("hyp.jsonl", JoinLines(corpus.hypothesis_lines));
  const Result one = RunCli({"correct", hyp, "--lexicon", lex, "--jobs", "1"});
  const Result eight = RunCli({"correct", hyp, "--lexicon", lex, "--jobs", "8"});
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.out, eight.out);
  EXPECT_EQ(one.err, eight.err);
}

TEST_F(CliTest, ScoreTableAndJson) {
  const auto corpus = MakeSyntheticCorpus(30, 2);
  const std::string lex = Write("lex.tsv", corpus.lexicon_tsv);
  const std::string ref = Write("ref.jsonl", JoinLines(corpus.reference_lines));
  const std::string hyp = Write("hyp.jsonl", JoinLines(corpus.hypothesis_lines));
  const Result corrected = RunCli({"correct", hyp, "--lexicon", lex});
  const std::string fixed = Write("fixed.jsonl", corrected.out);

  Result r = RunCli({"score", ref, "raw=" + hyp, fixed, "--report", Path("r.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("# filter: intersection"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\nraw "), std::string::npos);
  EXPECT_NE(r.out.find("\nfixed "), std::string::npos);
  const std::string report = Read(Path("r.json"));
  EXPECT_NE(report.find("\"system\": \"raw\""), std::string::npos);
  EXPECT_EQ(RunCli({"score", ref, "raw=" + hyp, fixed, "--format", "json"}).out, report);

  // Reference against itself.
  r = RunCli({"score", ref, "self=" + ref, "--format", "json"});
  EXPECT_NE(r.out.find("\"cer_phonemes\": 0.0,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"pitch_f1\": 1.0,"), std::string::npos);
  EXPECT_NE(r.out.find("\"boundary_accuracy\": 1.0,"), std::string::npos);
}

TEST_F(CliTest, ScoreWarnsOnMissingIds) {
  const std::string ref = Write(
      "ref.jsonl", R"({"id":"a","labels":"ア[イ#"})" "\n"
                   R"({"id":"b","labels":"カ]#"})" "\n");
  const std::string hyp = Write("hyp.jsonl", R"({"id":"a","labels":"ア[イ#"})" "\n");
  const Result r = RunCli({"score", ref, hyp});
  EXPECT_EQ(r.code, kExitErrors);
  EXPECT_NE(r.err.find("hyp: missing id b"), std::string::npos) << r.err;
}

TEST_F(CliTest, PipelineThroughStdinIsByteIdentical) {
  const auto corpus = MakeSyntheticCorpus(50, 42);
  const std::string lex = Write("lex.tsv", corpus.lexicon_tsv);
  const std::string ref = Write("ref.jsonl", JoinLines(corpus.reference_lines));
  const std::string hyps = JoinLines(corpus.hypothesis_lines);
  std::vector<std::string> reports;
  for (const char* jobs : {"1", "8", "1"}) {
    const Result corrected = RunCli({"correct", "-", "--lexicon", lex, "--jobs", jobs}, hyps);
    const Result scored = RunCli({"score", ref, "-", "--format", "json"}, corrected.out);
    ASSERT_EQ(scored.code, kExitOk) << scored.err;
    reports.push_back(scored.out);
  }
  EXPECT_EQ(reports[0], reports[1]);
  EXPECT_EQ(reports[0], reports[2]);
}

}  // namespace
}  // namespace accent_forge::cli

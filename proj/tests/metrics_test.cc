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

#include <random>
#include <string>
#include <vector>

#include "accent_forge/error.h"
#include "accent_forge/metrics.h"
#include "accent_forge/utf8.h"
#include "oracles.h"

namespace accent_forge {
namespace {

using testing::BruteForceLevenshtein;

UtteranceAnnotation U(const char* text) {
  return ParseUtterance(text, std::string(text).find('|') != std::string::npos);
}

std::vector<char32_t> CodePoints(const std::string& s) {
  const std::u32string cps = utf8::Decode(s);
  return {cps.begin(), cps.end()};
}

// Hand-rolled F1 from two pitch strings, H positive.
double OracleF1(const std::string& ref, const std::string& hyp) {
  double tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    tp += ref[i] == 'H' && hyp[i] == 'H';
    fp += ref[i] == 'L' && hyp[i] == 'H';
    fn += ref[i] == 'H' && hyp[i] == 'L';
  }
  if (tp == 0) return fp + fn == 0 ? 1.0 : 0.0;
  return 2 * tp / (2 * tp + fp + fn);
}

TEST(CerTest, SingleSubstitutionOverTwelveMoras) {
  EXPECT_DOUBLE_EQ(CharacterErrorRate("セーコーシテモシナクテモ",
                                      "セーコーシテモシナクタモ"),
                   1.0 / 12.0);
  const EditCounts c = CharacterCerCounts("セーコーシテモシナクテモ",
                                          "セーコーシテモシナクタモ");
  EXPECT_EQ(c.distance, 1u);
  EXPECT_EQ(c.reference_length, 12u);
}

TEST(CerTest, IdenticalIsZero) {
  EXPECT_EQ(CharacterErrorRate("ギョギョート", "ギョギョート"), 0.0);
}

TEST(CerTest, InsertedLongVowelCountsOnce) {
  EXPECT_EQ(CharacterCerCounts("ギョギョート", "ギョーギョート").distance, 1u);
}

TEST(CerTest, EmptyReferenceRejected) {
  EXPECT_THROW(CharacterErrorRate("", "ア"), LabelError);
  EXPECT_EQ(CharacterErrorRate("ア", ""), 1.0);
}

TEST(CerTest, NormalizedByReference) {
  // Distance is symmetric, the rate is not.
  EXPECT_DOUBLE_EQ(CharacterErrorRate("アイ", "アイウエ"), 1.0);
  EXPECT_DOUBLE_EQ(CharacterErrorRate("アイウエ", "アイ"), 0.5);
  EXPECT_GT(CharacterErrorRate("ア", "イウエオ"), 1.0);
}

TEST(CerTest, MatchesBruteForceOnRandomPairs) {
  const std::vector<std::string> alphabet = {"ア", "イ", "ョ", "ー", "a", "漢"};
  std::mt19937 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    std::string a, b;
    for (unsigned k = 1 + rng() % 10; k > 0; --k) a += alphabet[rng() % alphabet.size()];
    for (unsigned k = rng() % 10; k > 0; --k) b += alphabet[rng() % alphabet.size()];
    const EditCounts c = CharacterCerCounts(a, b);
    ASSERT_EQ(c.distance, BruteForceLevenshtein(CodePoints(a), CodePoints(b)));
    ASSERT_EQ(c.reference_length, CodePoints(a).size());
  }
}

TEST(CerTest, CorpusRateIsPooled) {
  EditCounts total;
  total += CharacterCerCounts("アイ", "アウ");        // 1/2
  total += CharacterCerCounts("アイウエオカ", "アイウエオカ");  // 0/6
  EXPECT_DOUBLE_EQ(total.Rate(), 1.0 / 8.0);
}

TEST(BoundaryAccuracyTest, Examples) {
  const UtteranceAnnotation ref = U("セ[ーコーシテ]モ#シ[ナ]クテモ#");
  BoundaryCounts c = BoundaryAccuracy(ref, ref);
  EXPECT_EQ(c.correct, 2u);
  EXPECT_EQ(c.total, 2u);

  c = BoundaryAccuracy(ref, U("セ[ーコーシ#テ[モシナクテモ#"));
  EXPECT_EQ(c.correct, 0u);
  EXPECT_EQ(c.total, 2u);

  c = BoundaryAccuracy(ref, U("セ[ーコーシテモシナクテモ#"));
  EXPECT_EQ(c.correct, 0u);
  EXPECT_EQ(c.total, 2u);

  // Pauses do not move mora offsets.
  c = BoundaryAccuracy(ref, U("セ[ーコーシテ]モ#_シ[ナ]クテモ#"));
  EXPECT_EQ(c.correct, 2u);
}

TEST(PitchF1Test, Examples) {
  PitchCounts c = PitchConfusion(PitchFromString("LHHLL"), PitchFromString("LHHHL"));
  EXPECT_EQ(c.true_positive, 2u);
  EXPECT_EQ(c.false_positive, 1u);
  EXPECT_EQ(c.false_negative, 0u);
  EXPECT_DOUBLE_EQ(c.F1(), 0.8);
  EXPECT_DOUBLE_EQ(PitchConfusion(PitchFromString("HLL"), PitchFromString("LHL")).F1(),
                   0.0);
  EXPECT_DOUBLE_EQ(PitchConfusion(PitchFromString("LHL"), PitchFromString("LHL")).F1(),
                   1.0);
  EXPECT_DOUBLE_EQ(PitchConfusion(PitchFromString("L"), PitchFromString("L")).F1(), 1.0);
  EXPECT_THROW(PitchConfusion(PitchFromString("LH"), PitchFromString("L")),
               LabelError);
}

TEST(PitchF1Test, MicroAverageDiffersFromMacro) {
  std::vector<EvalPair> pairs = {
      {"u1", U("ア[イ#"), U("ア[イ#")},
      {"u2", U("ア[イウエオ#"), U("ア[イ]ウエオ#")},
  };
  const double micro = PitchF1(pairs);
  const double macro = (OracleF1("LH", "LH") + OracleF1("LHHHH", "LHLLL")) / 2;
  EXPECT_NEAR(micro, 4.0 / 7.0, 1e-12);
  EXPECT_NEAR(macro, 0.7, 1e-12);
  EXPECT_NE(micro, macro);
}

TEST(PitchF1Test, MatchesOracleOnRandomPitch) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    std::string ref, hyp;
    for (unsigned k = 1 + rng() % 12; k > 0; --k) {
      ref += rng() % 2 ? 'H' : 'L';
      hyp += rng() % 2 ? 'H' : 'L';
    }
    ASSERT_DOUBLE_EQ(
        PitchConfusion(PitchFromString(ref), PitchFromString(hyp)).F1(),
        OracleF1(ref, hyp))
        << ref << " " << hyp;
  }
}

TEST(FilterTest, IntersectionAndPerSystem) {
  const Corpus ref = {{"a", U("ア[イ#")}, {"b", U("カ]キ#")}, {"c", U("サ[シ]#")}};
  SystemCorpus s1{"s1", {{"a", U("ア[イ#")}, {"b", U("カ[キ#")}, {"c", U("サ[ス]#")}}};
  SystemCorpus s2{"s2", {{"a", U("イ[イ#")}, {"b", U("カ]キ#")}, {"c", U("サ]シ#")}}};
  const std::vector<SystemCorpus> systems = {s1, s2};
  auto kept = FilterPhonemeCorrect(ref, systems, FilterMode::kIntersection);
  EXPECT_EQ(kept[0], (std::set<std::string>{"b"}));
  EXPECT_EQ(kept[1], (std::set<std::string>{"b"}));
  kept = FilterPhonemeCorrect(ref, systems, FilterMode::kPerSystem);
  EXPECT_EQ(kept[0], (std::set<std::string>{"a", "b"}));
  EXPECT_EQ(kept[1], (std::set<std::string>{"b", "c"}));

  const std::vector<SystemCorpus> one = {s1};
  EXPECT_EQ(FilterPhonemeCorrect(ref, one, FilterMode::kIntersection),
            FilterPhonemeCorrect(ref, one, FilterMode::kPerSystem));
}

TEST(FilterTest, IdMismatchRejected) {
  const Corpus ref = {{"a", U("ア[イ#")}, {"b", U("カ]キ#")}};
  const std::vector<SystemCorpus> systems = {{"s", {{"a", U("ア[イ#")}}}};
  EXPECT_THROW(FilterPhonemeCorrect(ref, systems, FilterMode::kIntersection),
               LabelError);
}

TEST(ScoreCorpusTest, PerfectHypothesis) {
  const Corpus ref = {{"a", U("漁業と|ギョ]ギョート#")}, {"b", U("家を|イ[エ]オ#")}};
  const std::vector<SystemCorpus> systems = {{"s", ref}};
  const ScoreReport r = ScoreCorpus(ref, systems, FilterMode::kIntersection)[0];
  EXPECT_EQ(r.cer_phonemes, 0.0);
  EXPECT_EQ(r.cer_graphemes, 0.0);
  EXPECT_EQ(r.boundary_accuracy, 1.0);
  EXPECT_EQ(r.pitch_f1, 1.0);
  EXPECT_EQ(r.counts.utterances_scored, 2u);
  EXPECT_EQ(r.counts.utterances_filtered_out, 0u);
  EXPECT_EQ(r.counts.reference_phrases, 2u);
  EXPECT_EQ(r.counts.reference_moras, 7u);
}

TEST(ScoreCorpusTest, SingleSubstitutionUtterance) {
  const Corpus ref = {{"a", U("セ[ーコーシテ]モ#シ[ナ]クテモ#")}};
  const std::vector<SystemCorpus> systems = {
      {"s", {{"a", U("セ[ーコーシテ]モ#シ[ナ]クタモ#")}}}};
  const ScoreReport r = ScoreCorpus(ref, systems, FilterMode::kIntersection)[0];
  EXPECT_DOUBLE_EQ(*r.cer_phonemes, 1.0 / 12.0);
  EXPECT_FALSE(r.cer_graphemes.has_value());
  EXPECT_EQ(r.counts.utterances_filtered_out, 1u);
  EXPECT_FALSE(r.boundary_accuracy.has_value());
  EXPECT_FALSE(r.pitch_f1.has_value());
}

TEST(ScoreCorpusTest, DisjointCorrectnessIsNotApplicable) {
  const Corpus ref = {{"a", U("ア[イ#")}, {"b", U("カ]キ#")}};
  const std::vector<SystemCorpus> systems = {
      {"s1", {{"a", U("ア[イ#")}, {"b", U("カ]ク#")}}},
      {"s2", {{"a", U("ア[ウ#")}, {"b", U("カ]キ#")}}}};
  for (const ScoreReport& r : ScoreCorpus(ref, systems, FilterMode::kIntersection)) {
    EXPECT_FALSE(r.boundary_accuracy.has_value()) << r.system;
    EXPECT_FALSE(r.pitch_f1.has_value()) << r.system;
    EXPECT_TRUE(r.cer_phonemes.has_value());
  }
  for (const ScoreReport& r : ScoreCorpus(ref, systems, FilterMode::kPerSystem)) {
    EXPECT_EQ(r.pitch_f1, 1.0) << r.system;
    EXPECT_EQ(r.counts.utterances_filtered_out, 1u);
  }
}

// Scoring the whole corpus under the intersection filter gives the same
// prosodic numbers as pre-filtering both sides to the kept ids.
TEST(ScoreCorpusTest, FilteringBeforeOrAfterPairingAgrees) {
  std::mt19937 rng(12);
  const std::vector<std::string> kana = {"ア", "イ", "カ", "キョ", "ー"};
  Corpus ref;
  std::vector<SystemCorpus> systems = {{"s1", {}}, {"s2", {}}};
  auto random_phrase = [&](const std::string& moras) {
    const int n = static_cast<int>(SegmentMoras(moras).size());
    return SerializePhrase(AccentPhrase(SegmentMoras(moras),
                                        static_cast<int>(rng() % (n + 1)))) + "#";
  };
  for (int u = 0; u < 60; ++u) {
    std::string moras;
    for (unsigned k = 1 + rng() % 5; k > 0; --k) moras += kana[rng() % kana.size()];
    const std::string id = "u" + std::to_string(u);
    ref[id] = ParseUtterance(random_phrase(moras), false);
    for (SystemCorpus& s : systems) {
      std::string hyp = moras;
      if (rng() % 3 == 0) hyp += "ー";
      s.utterances[id] = ParseUtterance(random_phrase(hyp), false);
    }
  }
  const auto whole = ScoreCorpus(ref, systems, FilterMode::kIntersection);
  const auto kept = FilterPhonemeCorrect(ref, systems, FilterMode::kIntersection);
  ASSERT_FALSE(kept[0].empty());
  Corpus ref_kept;
  std::vector<SystemCorpus> pre = {{"s1", {}}, {"s2", {}}};
  for (const std::string& id : kept[0]) {
    ref_kept[id] = ref.at(id);
    for (std::size_t k = 0; k < 2; ++k) pre[k].utterances[id] = systems[k].utterances.at(id);
  }
  const auto filtered = ScoreCorpus(ref_kept, pre, FilterMode::kIntersection);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_EQ(whole[k].pitch_f1, filtered[k].pitch_f1);
    EXPECT_EQ(whole[k].boundary_accuracy, filtered[k].boundary_accuracy);
    EXPECT_EQ(whole[k].counts.reference_moras, filtered[k].counts.reference_moras);
    EXPECT_EQ(filtered[k].counts.utterances_filtered_out, 0u);
  }
}

TEST(FilterModeTest, Names) {
  EXPECT_EQ(FilterModeName(FilterMode::kIntersection), "intersection");
  EXPECT_EQ(FilterModeName(FilterMode::kPerSystem), "per-system");
}

}  // namespace
}  // namespace accent_forge

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

#include "accent_forge/lexicon.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <tuple>

#include "accent_forge/error.h"
#include "accent_forge/utf8.h"

namespace accent_forge {

void Lexicon::Add(std::string surface, MoraSequence pronunciation) {
  auto [it, inserted] = entries_.try_emplace(surface);
  LexiconEntry& entry = it->second;
  if (inserted) {
    entry.surface = surface;
    max_surface_length_ =
        std::max(max_surface_length_, utf8::Decode(surface).size());
  }
  if (std::find(entry.pronunciations.begin(), entry.pronunciations.end(),
                pronunciation) == entry.pronunciations.end()) {
    entry.pronunciations.push_back(std::move(pronunciation));
  }
}

Lexicon Lexicon::FromRows(
    const std::vector<std::pair<std::string, std::string>>& rows) {
  Lexicon lexicon;
  for (const auto& [surface, pronunciation] : rows) {
    if (surface.empty()) {
      throw LabelError(ErrorCode::kMalformedLexiconRow, "empty surface");
    }
    MoraSequence moras = SegmentMoras(pronunciation);
    if (moras.empty()) {
      throw LabelError(ErrorCode::kMalformedLexiconRow,
                       "empty pronunciation for '" + surface + "'");
    }
    lexicon.Add(surface, std::move(moras));
  }
  return lexicon;
}

const LexiconEntry* Lexicon::Find(std::string_view surface) const {
  auto it = entries_.find(std::string(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

Lexicon LoadLexicon(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    auto fail = [&](const std::string& why) {
      return LabelError(ErrorCode::kMalformedLexiconRow,
                        "lexicon line " + std::to_string(line_no) + ": " + why);
    };
    if (cols.size() < 2 || cols.size() > 3) {
      throw fail("expected 2 or 3 tab-separated columns, got " +
                 std::to_string(cols.size()));
    }
    if (cols[0].empty()) throw fail("empty surface");
    try {
      if (SegmentMoras(cols[1]).empty()) throw fail("empty pronunciation");
    } catch (const LabelError& e) {
      if (e.code() == ErrorCode::kMalformedLexiconRow) throw;
      throw fail(e.what());
    }
    rows.emplace_back(std::move(cols[0]), std::move(cols[1]));
  }
  return Lexicon::FromRows(rows);
}

Lexicon LoadLexiconFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LabelError(ErrorCode::kInvalidArgument,
                     "cannot open lexicon '" + path + "'");
  }
  return LoadLexicon(in);
}

namespace {

// Length in code points of the unknown span starting at `i`: one kana plus
// a trailing combining kana when the kana can take one.
std::size_t UnknownSpanLength(const std::u32string& cps, std::size_t i) {
  const char32_t head = HiraganaToKatakana(cps[i]);
  if (i + 1 < cps.size() && IsBaseKana(head) && !IsStandaloneMoraKana(head) &&
      IsCombiningKana(HiraganaToKatakana(cps[i + 1]))) {
    return 2;
  }
  return 1;
}

}  // namespace

Segmentation Segment(std::string_view graphemes, const Lexicon& lexicon) {
  const std::u32string cps = utf8::Decode(graphemes);
  const std::size_t n = cps.size();

  struct Best {
    std::size_t spans = 0;
    std::size_t unknowns = 0;
    std::size_t length = 0;
    const LexiconEntry* entry = nullptr;
  };
  std::vector<Best> best(n + 1);
  for (std::size_t i = n; i-- > 0;) {
    Best pick;
    bool have = false;
    auto offer = [&](std::size_t length, const LexiconEntry* entry) {
      const Best& rest = best[i + length];
      Best cand{rest.spans + 1, rest.unknowns + (entry ? 0 : 1), length, entry};
      const auto key = std::make_tuple(cand.spans, cand.unknowns);
      const auto pick_key = std::make_tuple(pick.spans, pick.unknowns);
      if (!have || key < pick_key ||
          (key == pick_key && cand.length > pick.length)) {
        pick = cand;
        have = true;
      }
    };
    const std::size_t longest = std::min(lexicon.max_surface_length(), n - i);
    for (std::size_t len = 1; len <= longest; ++len) {
      if (const LexiconEntry* e =
              lexicon.Find(utf8::Encode(cps.substr(i, len)))) {
        offer(len, e);
      }
    }
    offer(UnknownSpanLength(cps, i), nullptr);
    best[i] = pick;
  }

  Segmentation out;
  for (std::size_t i = 0; i < n; i += best[i].length) {
    out.push_back(Span{utf8::Encode(cps.substr(i, best[i].length)),
                       best[i].entry});
  }
  return out;
}

PronLattice::PronLattice(std::vector<std::vector<MoraSequence>> groups)
    : groups_(std::move(groups)) {}

bool PronLattice::uncorrectable() const {
  return std::any_of(groups_.begin(), groups_.end(),
                     [](const auto& g) { return g.empty(); });
}

std::uint64_t PronLattice::PathCount() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (const auto& g : groups_) {
    if (g.empty()) return 0;
    if (count > kMax / g.size()) return kMax;
    count *= g.size();
  }
  return count;
}

std::vector<MoraSequence> PronLattice::EnumeratePaths(
    std::uint64_t limit) const {
  if (PathCount() > limit) {
    throw LabelError(ErrorCode::kInvalidArgument,
                     "lattice has more than " + std::to_string(limit) +
                         " paths");
  }
  std::vector<MoraSequence> paths{MoraSequence{}};
  for (const auto& group : groups_) {
    std::vector<MoraSequence> next;
    next.reserve(paths.size() * group.size());
    for (const MoraSequence& prefix : paths) {
      for (const MoraSequence& arc : group) {
        MoraSequence path = prefix;
        path.insert(path.end(), arc.begin(), arc.end());
        next.push_back(std::move(path));
      }
    }
    paths = std::move(next);
  }
  return paths;
}

PronLattice BuildLattice(const Segmentation& segmentation) {
  std::vector<std::vector<MoraSequence>> groups;
  groups.reserve(segmentation.size());
  for (const Span& span : segmentation) {
    if (span.known()) {
      groups.push_back(span.entry->pronunciations);
      continue;
    }
    // Unknown kana read as themselves; anything else has no candidate.
    std::vector<MoraSequence> group;
    try {
      MoraSequence moras = SegmentMoras(ToKatakana(span.surface));
      if (!moras.empty()) group.push_back(std::move(moras));
    } catch (const LabelError&) {
    }
    groups.push_back(std::move(group));
  }
  return PronLattice(std::move(groups));
}

}  // namespace accent_forge

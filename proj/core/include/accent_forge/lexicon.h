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

#ifndef ACCENT_FORGE_LEXICON_H_
#define ACCENT_FORGE_LEXICON_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "accent_forge/mora.h"

namespace accent_forge {

struct LexiconEntry {
  std::string surface;
  // Dictionary priority order; never empty.
  std::vector<MoraSequence> pronunciations;
};

// Surface form -> candidate pronunciations. Immutable once loaded.
class Lexicon {
 public:
  Lexicon() = default;

  // Rows are (surface, pronunciation) pairs in priority order. Duplicate
  // pairs keep their first occurrence.
  static Lexicon FromRows(
      const std::vector<std::pair<std::string, std::string>>& rows);

  const LexiconEntry* Find(std::string_view surface) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Longest surface, in code points.
  std::size_t max_surface_length() const { return max_surface_length_; }

 private:
  void Add(std::string surface, MoraSequence pronunciation);

  std::unordered_map<std::string, LexiconEntry> entries_;
  std::size_t max_surface_length_ = 0;
};

// Reads `surface<TAB>pronunciation[<TAB>accent_type]` rows. Lines starting
// with '#' and blank lines are skipped. The accent column is accepted and
// ignored. Throws LabelError(kMalformedLexiconRow) naming the line number.
Lexicon LoadLexicon(std::istream& in);
Lexicon LoadLexiconFile(const std::string& path);

struct Span {
  std::string surface;
  // Null for an unknown span.
  const LexiconEntry* entry = nullptr;

  bool known() const { return entry != nullptr; }
};

// Spans tile the graphemes exactly, in order.
using Segmentation = std::vector<Span>;

// Minimum-span tiling by lexicon surfaces and unknown single-mora spans.
// Ties prefer fewer unknown spans, then the longest first span, recursively.
Segmentation Segment(std::string_view graphemes, const Lexicon& lexicon);

// Candidate phrase pronunciations: one arc group per span, each group
// holding that span's pronunciations in dictionary order. Paths are
// the cartesian product of the groups.
class PronLattice {
 public:
  PronLattice() = default;
  explicit PronLattice(std::vector<std::vector<MoraSequence>> groups);

  const std::vector<std::vector<MoraSequence>>& groups() const {
    return groups_;
  }
  std::size_t span_count() const { return groups_.size(); }
  // A span without any candidate leaves no path through the lattice.
  bool uncorrectable() const;
  // Saturates at UINT64_MAX.
  std::uint64_t PathCount() const;
  // All paths in lexicographic arc order. Throws if there are more than
  // `limit`.
  std::vector<MoraSequence> EnumeratePaths(std::uint64_t limit) const;

 private:
  std::vector<std::vector<MoraSequence>> groups_;
};

PronLattice BuildLattice(const Segmentation& segmentation);

}  // namespace accent_forge

#endif  // ACCENT_FORGE_LEXICON_H_

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

#ifndef ACCENT_FORGE_EDIT_DISTANCE_H_
#define ACCENT_FORGE_EDIT_DISTANCE_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "accent_forge/mora.h"

namespace accent_forge {

// Unit-cost Levenshtein distance over arbitrary tokens, two-row DP.
template <typename T>
std::size_t LevenshteinDistance(std::span<const T> a, std::span<const T> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[b.size()];
}

inline int MoraEditDistance(std::span<const Mora> a, std::span<const Mora> b) {
  return static_cast<int>(LevenshteinDistance(a, b));
}

}  // namespace accent_forge

#endif  // ACCENT_FORGE_EDIT_DISTANCE_H_

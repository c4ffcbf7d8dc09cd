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

#ifndef ACCENT_FORGE_MORA_H_
#define ACCENT_FORGE_MORA_H_

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace accent_forge {

// Small kana that attach to the preceding base kana. ヵ and ヶ are not part
// of the set; they never occur in pronunciation strings.
namespace internal {

enum KanaKind : std::uint8_t { kNotBase, kBase, kStandalone, kCombining };

// Kind of each code point in U+30A0..U+30FF.
inline constexpr std::array<std::uint8_t, 96> kKatakanaKinds = [] {
  std::array<std::uint8_t, 96> kinds{};
  for (char32_t cp = 0x30A1; cp <= 0x30FA; ++cp) kinds[cp - 0x30A0] = kBase;
  for (char32_t cp : {U'ァ', U'ィ', U'ゥ', U'ェ', U'ォ', U'ャ', U'ュ', U'ョ', U'ヮ'}) {
    kinds[cp - 0x30A0] = kCombining;
  }
  for (char32_t cp : {U'ー', U'ッ', U'ン'}) kinds[cp - 0x30A0] = kStandalone;
  return kinds;
}();

constexpr KanaKind KindOf(char32_t cp) {
  return cp >= 0x30A0 && cp <= 0x30FF
             ? static_cast<KanaKind>(kKatakanaKinds[cp - 0x30A0])
             : kNotBase;
}

}  // namespace internal

constexpr bool IsCombiningKana(char32_t cp) {
  return internal::KindOf(cp) == internal::kCombining;
}
// Any Katakana usable as the first code point of a mora, including ー.
constexpr bool IsBaseKana(char32_t cp) {
  const auto kind = internal::KindOf(cp);
  return kind == internal::kBase || kind == internal::kStandalone;
}
// ー, ッ and ン: standalone moras that never take a combining kana.
constexpr bool IsStandaloneMoraKana(char32_t cp) {
  return internal::KindOf(cp) == internal::kStandalone;
}
constexpr bool IsHiragana(char32_t cp) { return cp >= 0x3041 && cp <= 0x3096; }
constexpr char32_t HiraganaToKatakana(char32_t cp) {
  return IsHiragana(cp) ? cp + 0x60 : cp;
}

// One rhythmic unit: a base kana plus at most one combining kana.
// Stored inline: a mora is at most two code points, so copies never
// allocate.
class Mora {
 public:
  // Throws LabelError unless `text` is exactly one valid mora.
  static Mora FromText(std::string_view text);

  std::string_view text() const { return {bytes_.data(), size_}; }

  // Unused bytes stay zero, so the whole buffer can be compared.
  friend bool operator==(const Mora& a, const Mora& b) {
    return a.size_ == b.size_ &&
           std::memcmp(a.bytes_.data(), b.bytes_.data(), kCapacity) == 0;
  }
  friend auto operator<=>(const Mora& a, const Mora& b) {
    return a.text() <=> b.text();
  }

 private:
  friend class MoraBuilder;
  Mora() = default;
  // Callers only pass single code points; two always fit.
  void Append(std::string_view bytes) {
    for (char c : bytes) bytes_[size_++] = c;
  }

  static constexpr std::size_t kCapacity = 8;
  std::array<char, kCapacity> bytes_{};
  std::uint8_t size_ = 0;
};

using MoraSequence = std::vector<Mora>;

// Splits Katakana into moras. Throws LabelError for a non-Katakana code
// point or a combining kana with nothing to attach to.
MoraSequence SegmentMoras(std::string_view katakana);

std::string JoinMoras(std::span<const Mora> moras);

// Converts Hiragana code points to Katakana and leaves everything else.
std::string ToKatakana(std::string_view text);

// Builds moras incrementally from code points. Used by the label parser,
// which interleaves pitch markers with kana.
class MoraBuilder {
 public:
  enum class Result { kNewMora, kAttached, kOrphan, kNotKana };

  Result Push(char32_t cp);
  // Same as Push(cp) when `bytes` is the UTF-8 encoding of `cp`.
  Result Push(char32_t cp, std::string_view bytes) {
    const internal::KanaKind kind = internal::KindOf(cp);
    if (kind == internal::kCombining) {
      if (!can_attach_) return Result::kOrphan;
      moras_.back().Append(bytes);
      can_attach_ = false;
      return Result::kAttached;
    }
    if (kind == internal::kNotBase) return Result::kNotKana;
    Mora mora;
    mora.Append(bytes);
    moras_.push_back(mora);
    can_attach_ = kind == internal::kBase;
    return Result::kNewMora;
  }
  // Forgets the attachment point so the next combining kana is an orphan.
  void Break() { can_attach_ = false; }

  MoraSequence& moras() { return moras_; }
  MoraSequence Take() { return std::move(moras_); }

 private:
  MoraSequence moras_;
  bool can_attach_ = false;
};

}  // namespace accent_forge

#endif  // ACCENT_FORGE_MORA_H_

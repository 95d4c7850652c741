// Copyright 2026 The vntn Authors.
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

#include "vntn/unicode.h"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <utility>

namespace vntn::unicode {
namespace {

struct CombiningClassEntry {
  char32_t cp;
  std::uint8_t ccc;
};

struct DecompositionEntry {
  char32_t cp;
  char32_t first;
  char32_t second;  // 0 for singleton decompositions
};

struct CompositionEntry {
  char32_t first;
  char32_t second;
  char32_t composite;
};

struct MappingEntry {
  char32_t from;
  char32_t to;
};

struct CodepointRange {
  char32_t first;
  char32_t last;
};

#include "unicode_data.inc"

// Hangul syllables are composed and decomposed algorithmically.
constexpr char32_t kSBase = 0xAC00;
constexpr char32_t kLBase = 0x1100;
constexpr char32_t kVBase = 0x1161;
constexpr char32_t kTBase = 0x11A7;
constexpr char32_t kLCount = 19;
constexpr char32_t kVCount = 21;
constexpr char32_t kTCount = 28;
constexpr char32_t kNCount = kVCount * kTCount;
constexpr char32_t kSCount = kLCount * kNCount;

template <std::size_t N>
bool InRanges(const CodepointRange (&ranges)[N], char32_t cp) {
  auto it = std::upper_bound(
      std::begin(ranges), std::end(ranges), cp,
      [](char32_t value, const CodepointRange& r) { return value < r.first; });
  if (it == std::begin(ranges)) return false;
  --it;
  return cp <= it->last;
}

const DecompositionEntry* FindDecomposition(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(kDecomposition), std::end(kDecomposition), cp,
      [](const DecompositionEntry& e, char32_t value) { return e.cp < value; });
  if (it == std::end(kDecomposition) || it->cp != cp) return nullptr;
  return &*it;
}

char32_t Compose(char32_t first, char32_t second) {
  if (first >= kLBase && first < kLBase + kLCount && second >= kVBase &&
      second < kVBase + kVCount) {
    return kSBase + ((first - kLBase) * kVCount + (second - kVBase)) * kTCount;
  }
  if (first >= kSBase && first < kSBase + kSCount &&
      (first - kSBase) % kTCount == 0 && second > kTBase &&
      second < kTBase + kTCount) {
    return first + (second - kTBase);
  }
  auto it = std::lower_bound(
      std::begin(kComposition), std::end(kComposition),
      std::pair{first, second},
      [](const CompositionEntry& e, const std::pair<char32_t, char32_t>& key) {
        return std::pair{e.first, e.second} < key;
      });
  if (it == std::end(kComposition) || it->first != first ||
      it->second != second) {
    return 0;
  }
  return it->composite;
}

void DecomposeInto(char32_t cp, std::u32string* out) {
  if (cp >= kSBase && cp < kSBase + kSCount) {
    const char32_t index = cp - kSBase;
    out->push_back(kLBase + index / kNCount);
    out->push_back(kVBase + (index % kNCount) / kTCount);
    if (index % kTCount != 0) out->push_back(kTBase + index % kTCount);
    return;
  }
  const DecompositionEntry* d = FindDecomposition(cp);
  if (d == nullptr) {
    out->push_back(cp);
    return;
  }
  DecomposeInto(d->first, out);
  if (d->second != 0) DecomposeInto(d->second, out);
}

// Canonical ordering: stable-sort every run of non-starters by class.
void ReorderMarks(std::u32string* cps) {
  std::size_t i = 0;
  while (i < cps->size()) {
    if (CombiningClass((*cps)[i]) == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps->size() && CombiningClass((*cps)[j]) != 0) ++j;
    std::stable_sort(cps->begin() + i, cps->begin() + j,
                     [](char32_t a, char32_t b) {
                       return CombiningClass(a) < CombiningClass(b);
                     });
    i = j;
  }
}

std::u32string CanonicalDecompose(std::u32string_view cps) {
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) DecomposeInto(cp, &out);
  ReorderMarks(&out);
  return out;
}

std::u32string CanonicalCompose(const std::u32string& cps) {
  std::u32string out;
  if (cps.empty()) return out;
  out.reserve(cps.size());
  std::size_t starter_pos = 0;
  char32_t starter = cps[0];
  // 256 blocks composition when the string starts with a non-starter.
  int last_class = CombiningClass(starter) == 0 ? 0 : 256;
  out.push_back(starter);
  for (std::size_t i = 1; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    const int cls = CombiningClass(cp);
    if (last_class != 256) {
      const char32_t composite = Compose(starter, cp);
      if (composite != 0 && (last_class < cls || last_class == 0)) {
        out[starter_pos] = composite;
        starter = composite;
        continue;
      }
    }
    if (cls == 0) {
      starter_pos = out.size();
      starter = cp;
    }
    last_class = cls;
    out.push_back(cp);
  }
  return out;
}

// Standard NFC quick check; "maybe" answers count as "no".
bool QuickCheckNfc(std::string_view text) {
  int last_class = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (static_cast<unsigned char>(text[pos]) < 0x80) {
      ++pos;
      last_class = 0;
      continue;
    }
    const char32_t cp = DecodeNext(text, &pos);
    const int cls = CombiningClass(cp);
    if (cls != 0 && last_class > cls) return false;
    if (InRanges(kNfcNotYesRanges, cp)) return false;
    last_class = cls;
  }
  return true;
}

}  // namespace

char32_t DecodeNext(std::string_view text, std::size_t* pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const std::size_t i = *pos;
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    *pos = i + 1;
    return b0;
  }
  int length = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    length = 2;
    cp = b0 & 0x1F;
    min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    length = 3;
    cp = b0 & 0x0F;
    min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    length = 4;
    cp = b0 & 0x07;
    min = 0x10000;
  } else {
    *pos = i + 1;
    return kReplacementChar;
  }
  if (i + length > text.size()) {
    *pos = i + 1;
    return kReplacementChar;
  }
  for (int k = 1; k < length; ++k) {
    const unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) {
      *pos = i + 1;
      return kReplacementChar;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    *pos = i + 1;
    return kReplacementChar;
  }
  *pos = i + length;
  return cp;
}

char32_t DecodePrev(std::string_view text, std::size_t pos) {
  if (pos == 0) return 0;
  std::size_t start = pos - 1;
  // Step back over at most three continuation bytes.
  while (start > 0 && pos - start < 4 &&
         (static_cast<unsigned char>(text[start]) & 0xC0) == 0x80) {
    --start;
  }
  std::size_t p = start;
  const char32_t cp = DecodeNext(text, &p);
  return p == pos ? cp : kReplacementChar;
}

void AppendUtf8(char32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::u32string ToCodepoints(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) out.push_back(DecodeNext(text, &pos));
  return out;
}

std::string FromCodepoints(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) AppendUtf8(cp, &out);
  return out;
}

std::size_t CountScalars(std::string_view text) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    DecodeNext(text, &pos);
    ++count;
  }
  return count;
}

bool IsLetter(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  }
  return InRanges(kLetterRanges, cp);
}

bool IsDigit(char32_t cp) {
  if (cp < 0x80) return cp >= '0' && cp <= '9';
  return InRanges(kDigitRanges, cp);
}

bool IsSpaceSeparator(char32_t cp) { return InRanges(kSpaceRanges, cp); }

int CombiningClass(char32_t cp) {
  if (cp < 0x300) return 0;
  auto it = std::lower_bound(
      std::begin(kCombiningClass), std::end(kCombiningClass), cp,
      [](const CombiningClassEntry& e, char32_t value) { return e.cp < value; });
  if (it == std::end(kCombiningClass) || it->cp != cp) return 0;
  return it->ccc;
}

char32_t ToLower(char32_t cp) {
  if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 32 : cp;
  auto it = std::lower_bound(
      std::begin(kLowercase), std::end(kLowercase), cp,
      [](const MappingEntry& e, char32_t value) { return e.from < value; });
  if (it == std::end(kLowercase) || it->from != cp) return cp;
  return it->to;
}

std::string ToLower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) AppendUtf8(ToLower(DecodeNext(text, &pos)), &out);
  return out;
}

std::string Nfc(std::string_view text) {
  if (QuickCheckNfc(text)) return std::string(text);
  return FromCodepoints(CanonicalCompose(CanonicalDecompose(ToCodepoints(text))));
}

std::string Nfd(std::string_view text) {
  return FromCodepoints(CanonicalDecompose(ToCodepoints(text)));
}

bool HasCompositionBoundaryBefore(char32_t cp) {
  return CombiningClass(cp) == 0 && !InRanges(kNfcNotYesRanges, cp);
}

bool IsNfc(std::string_view text) {
  return QuickCheckNfc(text) || Nfc(text) == text;
}

std::string FoldDiacritics(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : CanonicalDecompose(ToCodepoints(text))) {
    if (CombiningClass(cp) != 0) continue;
    if (cp == U'đ' || cp == U'Đ') cp = U'd';
    AppendUtf8(ToLower(cp), &out);
  }
  return out;
}

}  // namespace vntn::unicode

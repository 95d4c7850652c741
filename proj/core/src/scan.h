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

// Lexical helpers shared by the pattern passes. Positions are byte offsets.

#ifndef VNTN_SRC_SCAN_H_
#define VNTN_SRC_SCAN_H_

#include <cstddef>
#include <string_view>

#include "vntn/unicode.h"

namespace vntn::scan {

inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

inline bool DigitAt(std::string_view text, std::size_t pos) {
  return pos < text.size() && IsAsciiDigit(text[pos]);
}

inline bool WordCharBefore(std::string_view text, std::size_t pos) {
  return pos > 0 && unicode::IsWordChar(unicode::DecodePrev(text, pos));
}

// True when the code point at pos would fuse with the character before it
// under NFC.
inline bool FusingMarkAt(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return false;
  return !unicode::HasCompositionBoundaryBefore(unicode::DecodeNext(text, &pos));
}

// True when the code point at pos continues the token ending there: a word
// char, or a mark that would fuse with a replacement's last letter.
inline bool AttachedAt(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return false;
  const char32_t cp = unicode::DecodeNext(text, &pos);
  return unicode::IsWordChar(cp) || !unicode::HasCompositionBoundaryBefore(cp);
}

inline std::size_t DigitRunEnd(std::string_view text, std::size_t pos) {
  while (DigitAt(text, pos)) ++pos;
  return pos;
}

// True when text[pos - 1] is one of `joiners` and a digit precedes it, i.e.
// the token at pos continues a numeric expression to its left.
inline bool JoinedOnLeft(std::string_view text, std::size_t pos,
                         std::string_view joiners) {
  return pos >= 2 && joiners.find(text[pos - 1]) != std::string_view::npos &&
         IsAsciiDigit(text[pos - 2]);
}

// True when text[end] is one of `joiners` and a digit follows it.
inline bool JoinedOnRight(std::string_view text, std::size_t end,
                          std::string_view joiners) {
  return end + 1 < text.size() &&
         joiners.find(text[end]) != std::string_view::npos &&
         IsAsciiDigit(text[end + 1]);
}

// End of the maximal run of digits, dots and commas starting at the digit at
// `pos`, with trailing dots and commas (sentence punctuation) excluded.
inline std::size_t NumberRunEnd(std::string_view text, std::size_t pos) {
  std::size_t end = pos;
  while (end < text.size() &&
         (IsAsciiDigit(text[end]) || text[end] == '.' || text[end] == ',')) {
    ++end;
  }
  while (end > pos && !IsAsciiDigit(text[end - 1])) --end;
  return end;
}

// A '-' directly before `pos` that starts the text or follows whitespace.
inline bool HasNegativeSign(std::string_view text, std::size_t pos) {
  if (pos == 0 || text[pos - 1] != '-') return false;
  if (pos == 1) return true;
  const char before = text[pos - 2];
  return before == ' ' || before == '\t' || before == '\n';
}

}  // namespace vntn::scan

#endif  // VNTN_SRC_SCAN_H_

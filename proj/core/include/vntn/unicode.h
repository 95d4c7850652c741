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

// UTF-8 and Unicode character-property helpers used across the passes.

#ifndef VNTN_UNICODE_H_
#define VNTN_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vntn::unicode {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes the code point starting at text[*pos] and advances *pos. Invalid
// or truncated sequences yield U+FFFD and advance by one byte.
char32_t DecodeNext(std::string_view text, std::size_t* pos);

// Decodes the code point that ends right before byte `pos`; returns 0 when
// pos == 0.
char32_t DecodePrev(std::string_view text, std::size_t pos);

void AppendUtf8(char32_t cp, std::string* out);

std::u32string ToCodepoints(std::string_view text);
std::string FromCodepoints(std::u32string_view cps);

// Number of Unicode scalar values in `text`.
std::size_t CountScalars(std::string_view text);

// General category L*.
bool IsLetter(char32_t cp);
// General category Nd.
bool IsDigit(char32_t cp);
// Letters and digits form words; everything else is a token boundary.
inline bool IsWordChar(char32_t cp) { return IsLetter(cp) || IsDigit(cp); }
// General category Zs.
bool IsSpaceSeparator(char32_t cp);

int CombiningClass(char32_t cp);

// Simple (one-to-one) lowercase mapping.
char32_t ToLower(char32_t cp);
std::string ToLower(std::string_view text);

std::string Nfc(std::string_view text);
std::string Nfd(std::string_view text);
bool IsNfc(std::string_view text);

// False for code points that can combine with or reorder around the
// preceding character under NFC.
bool HasCompositionBoundaryBefore(char32_t cp);

// NFD, drop combining marks, map đ/Đ to d/D, lowercase. Used to compare
// Vietnamese text against references printed without diacritics.
std::string FoldDiacritics(std::string_view text);

}  // namespace vntn::unicode

#endif  // VNTN_UNICODE_H_

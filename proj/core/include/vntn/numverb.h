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

// Vietnamese cardinal and decimal number reading.
//
// Integers are read in groups of three digits (hundreds, tens, units), each
// followed by its magnitude word. Readings above one tỷ (10^9) are composed
// recursively: the count of tỷ is itself read as a number, so 10^12 reads
// "một nghìn tỷ". Irregular forms:
//
//   15 -> mười lăm        21 -> hai mươi mốt      25 -> hai mươi lăm
//   105 -> một trăm linh năm
//   2023 -> hai nghìn không trăm hai mươi ba   (zero-hundred padding)

#ifndef VNTN_NUMVERB_H_
#define VNTN_NUMVERB_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vntn/trace.h"

namespace vntn {

struct Lexicon {
  std::array<std::string, 10> digit_words;
  std::string ten_word;                       // 10..19
  std::string tens_multiplier_word;           // 20, 30, ...
  std::string irregular_unit_one_after_tens;  // 21, 31, ...
  std::string irregular_unit_five_after_tens;
  std::string hundred_word;
  std::string zero_tens_connector;  // 105, 1005, ...
  // Magnitude words for 10^3, 10^6, 10^9.
  std::string thousand_word;
  std::string million_word;
  std::string billion_word;
  std::string decimal_point_word;
  std::string negative_word;

  // Northern-standard forms: nghìn, linh, bốn.
  static const Lexicon& Vietnamese();

  // Throws FormatError naming the first empty field.
  void Validate() const;
};

// Largest integer VerbalizeInteger accepts (10^15 - 1).
inline constexpr std::uint64_t kMaxVerbalizable = 999'999'999'999'999ULL;

// Throws RangeError when n > kMaxVerbalizable.
std::string VerbalizeInteger(std::uint64_t n,
                             const Lexicon& lexicon = Lexicon::Vietnamese());

// Reads "<integer> phẩy <fraction>". A fraction of one or two digits without
// a leading zero is read as a cardinal ("3,25" -> "ba phẩy hai mươi lăm");
// anything else digit by digit ("3,05" -> "ba phẩy không năm"). Throws
// FormatError if fraction_digits is empty or has a non-digit.
std::string VerbalizeDecimal(std::uint64_t integer_part,
                             std::string_view fraction_digits,
                             const Lexicon& lexicon = Lexicon::Vietnamese());

enum class NumberKind { kInteger, kDecimal };

struct NumberToken {
  NumberKind kind = NumberKind::kInteger;
  std::uint64_t integer_part = 0;
  std::string fraction_digits;  // empty for kInteger

  friend bool operator==(const NumberToken&, const NumberToken&) = default;
};

// Splits a written number such as "1.500.000", "3,5" or "2.5".
//
// Dots followed by groups of exactly three digits are thousands separators.
// A comma introduces the fraction. A single dot that does not form valid
// grouping is a decimal point. Throws FormatError for any other shape (e.g.
// "1.5,3", "1.2.3", "1,2,3") and RangeError when the integer part exceeds
// kMaxVerbalizable.
NumberToken ParseNumberToken(std::string_view token);

std::string VerbalizeNumber(const NumberToken& number,
                            const Lexicon& lexicon = Lexicon::Vietnamese());

// Pass 6. Finds standalone number tokens (with an optional leading minus
// that starts the text or follows whitespace) and reads them. Tokens glued
// to letters ("A4", "3G") and both sides of an "a/b" shape are left alone,
// as are tokens ParseNumberToken rejects.
std::vector<Edit> FindNumbers(std::string_view text,
                              const Lexicon& lexicon = Lexicon::Vietnamese());

std::string NormalizeNumbers(std::string_view text);

}  // namespace vntn

#endif  // VNTN_NUMVERB_H_

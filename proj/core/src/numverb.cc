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

#include "vntn/numverb.h"

#include <string>
#include <vector>

#include "scan.h"
#include "vntn/error.h"

namespace vntn {
namespace {

constexpr std::uint64_t kThousand = 1'000;
constexpr std::uint64_t kMillion = 1'000'000;
constexpr std::uint64_t kBillion = 1'000'000'000;

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

void AppendWord(std::string_view word, std::string* out) {
  if (!out->empty()) out->push_back(' ');
  out->append(word);
}

// 10 <= n <= 99.
void AppendTens(int n, const Lexicon& lex, std::string* out) {
  const int tens = n / 10;
  const int units = n % 10;
  if (tens == 1) {
    AppendWord(lex.ten_word, out);
  } else {
    AppendWord(lex.digit_words[tens], out);
    AppendWord(lex.tens_multiplier_word, out);
  }
  if (units == 0) return;
  if (units == 5) {
    AppendWord(lex.irregular_unit_five_after_tens, out);
  } else if (units == 1 && tens >= 2) {
    AppendWord(lex.irregular_unit_one_after_tens, out);
  } else {
    AppendWord(lex.digit_words[units], out);
  }
}

// 1 <= n <= 999. `padded` is set when a nonzero higher group was already
// read; the group is then always read with its hundreds digit.
void AppendGroup(int n, bool padded, const Lexicon& lex, std::string* out) {
  const int hundreds = n / 100;
  const int rest = n % 100;
  const bool has_hundreds = hundreds > 0 || padded;
  if (has_hundreds) {
    AppendWord(lex.digit_words[hundreds], out);
    AppendWord(lex.hundred_word, out);
  }
  if (rest == 0) return;
  if (rest < 10) {
    if (has_hundreds) AppendWord(lex.zero_tens_connector, out);
    AppendWord(lex.digit_words[rest], out);
    return;
  }
  AppendTens(rest, lex, out);
}

// 1 <= n < 10^9.
void AppendBelowBillion(std::uint64_t n, bool padded, const Lexicon& lex,
                        std::string* out) {
  const struct {
    std::uint64_t value;
    const std::string* word;
  } groups[] = {
      {n / kMillion, &lex.million_word},
      {n / kThousand % kThousand, &lex.thousand_word},
      {n % kThousand, nullptr},
  };
  bool higher = padded;
  for (const auto& g : groups) {
    if (g.value == 0) continue;
    AppendGroup(static_cast<int>(g.value), higher, lex, out);
    if (g.word != nullptr) AppendWord(*g.word, out);
    higher = true;
  }
}

void AppendInteger(std::uint64_t n, bool padded, const Lexicon& lex,
                   std::string* out) {
  if (n < kBillion) {
    AppendBelowBillion(n, padded, lex, out);
    return;
  }
  AppendInteger(n / kBillion, padded, lex, out);
  AppendWord(lex.billion_word, out);
  if (n % kBillion != 0) AppendBelowBillion(n % kBillion, true, lex, out);
}

std::uint64_t ParseDigits(std::string_view digits) {
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  if (digits.size() - first > 15) {
    throw RangeError("number " + std::string(digits) +
                     " exceeds the supported maximum of 10^15 - 1");
  }
  std::uint64_t value = 0;
  for (char c : digits.substr(first)) value = value * 10 + (c - '0');
  return value;
}

std::vector<std::string_view> SplitOn(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    if (at == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, at - start));
    start = at + 1;
  }
}

}  // namespace

const Lexicon& Lexicon::Vietnamese() {
  static const Lexicon* const kLexicon = new Lexicon{
      .digit_words = {"không", "một", "hai", "ba", "bốn", "năm", "sáu", "bảy",
                      "tám", "chín"},
      .ten_word = "mười",
      .tens_multiplier_word = "mươi",
      .irregular_unit_one_after_tens = "mốt",
      .irregular_unit_five_after_tens = "lăm",
      .hundred_word = "trăm",
      .zero_tens_connector = "linh",
      .thousand_word = "nghìn",
      .million_word = "triệu",
      .billion_word = "tỷ",
      .decimal_point_word = "phẩy",
      .negative_word = "âm",
  };
  return *kLexicon;
}

void Lexicon::Validate() const {
  for (std::size_t d = 0; d < digit_words.size(); ++d) {
    if (digit_words[d].empty()) {
      throw FormatError("lexicon: empty word for digit " + std::to_string(d));
    }
  }
  const std::pair<const char*, const std::string*> fields[] = {
      {"ten_word", &ten_word},
      {"tens_multiplier_word", &tens_multiplier_word},
      {"irregular_unit_one_after_tens", &irregular_unit_one_after_tens},
      {"irregular_unit_five_after_tens", &irregular_unit_five_after_tens},
      {"hundred_word", &hundred_word},
      {"zero_tens_connector", &zero_tens_connector},
      {"thousand_word", &thousand_word},
      {"million_word", &million_word},
      {"billion_word", &billion_word},
      {"decimal_point_word", &decimal_point_word},
      {"negative_word", &negative_word},
  };
  for (const auto& [name, value] : fields) {
    if (value->empty()) throw FormatError(std::string("lexicon: empty ") + name);
  }
}

std::string VerbalizeInteger(std::uint64_t n, const Lexicon& lexicon) {
  if (n > kMaxVerbalizable) {
    throw RangeError("integer " + std::to_string(n) +
                     " exceeds the supported maximum of 10^15 - 1");
  }
  if (n == 0) return lexicon.digit_words[0];
  std::string out;
  AppendInteger(n, /*padded=*/false, lexicon, &out);
  return out;
}

std::string VerbalizeDecimal(std::uint64_t integer_part,
                             std::string_view fraction_digits,
                             const Lexicon& lexicon) {
  if (fraction_digits.empty()) throw FormatError("empty decimal fraction");
  for (char c : fraction_digits) {
    if (!IsAsciiDigit(c)) {
      throw FormatError("non-digit in decimal fraction \"" +
                        std::string(fraction_digits) + "\"");
    }
  }
  std::string out = VerbalizeInteger(integer_part, lexicon);
  AppendWord(lexicon.decimal_point_word, &out);
  if (fraction_digits.size() <= 2 && fraction_digits[0] != '0') {
    AppendWord(VerbalizeInteger(ParseDigits(fraction_digits), lexicon), &out);
  } else {
    for (char c : fraction_digits) {
      AppendWord(lexicon.digit_words[c - '0'], &out);
    }
  }
  return out;
}

NumberToken ParseNumberToken(std::string_view token) {
  const auto fail = [&](const char* why) -> FormatError {
    return FormatError("malformed number \"" + std::string(token) +
                       "\": " + why);
  };
  if (token.empty() || !IsAsciiDigit(token.front()) ||
      !IsAsciiDigit(token.back())) {
    throw fail("must start and end with a digit");
  }
  for (char c : token) {
    if (!IsAsciiDigit(c) && c != '.' && c != ',') throw fail("bad character");
  }

  const std::vector<std::string_view> comma_parts = SplitOn(token, ',');
  if (comma_parts.size() > 2) throw fail("more than one comma");
  const bool has_comma = comma_parts.size() == 2;
  if (has_comma && comma_parts[1].find('.') != std::string_view::npos) {
    throw fail("dot after the decimal comma");
  }

  const std::vector<std::string_view> groups = SplitOn(comma_parts[0], '.');
  for (std::string_view g : groups) {
    if (g.empty()) throw fail("empty digit group");
  }
  bool grouped = true;
  for (std::size_t i = 1; i < groups.size(); ++i) {
    if (groups[i].size() != 3) grouped = false;
  }

  NumberToken number;
  if (grouped) {
    std::string digits;
    for (std::string_view g : groups) digits.append(g);
    number.integer_part = ParseDigits(digits);
    if (has_comma) {
      number.kind = NumberKind::kDecimal;
      number.fraction_digits = std::string(comma_parts[1]);
    }
    return number;
  }
  if (has_comma) throw fail("invalid thousands grouping before the comma");
  if (groups.size() != 2) throw fail("invalid thousands grouping");
  number.kind = NumberKind::kDecimal;
  number.integer_part = ParseDigits(groups[0]);
  number.fraction_digits = std::string(groups[1]);
  return number;
}

std::string VerbalizeNumber(const NumberToken& number, const Lexicon& lexicon) {
  if (number.kind == NumberKind::kDecimal) {
    return VerbalizeDecimal(number.integer_part, number.fraction_digits,
                            lexicon);
  }
  return VerbalizeInteger(number.integer_part, lexicon);
}

std::vector<Edit> FindNumbers(std::string_view text, const Lexicon& lexicon) {
  std::vector<Edit> edits;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!scan::DigitAt(text, pos) ||
        (pos > 0 && scan::IsAsciiDigit(text[pos - 1]))) {
      ++pos;
      continue;
    }
    const std::size_t end = scan::NumberRunEnd(text, pos);
    const bool standalone = !scan::WordCharBefore(text, pos) &&
                            !scan::AttachedAt(text, end) &&
                            !scan::JoinedOnLeft(text, pos, "/.,") &&
                            !scan::JoinedOnRight(text, end, "/");
    if (standalone) {
      try {
        std::string words = VerbalizeNumber(
            ParseNumberToken(text.substr(pos, end - pos)), lexicon);
        std::size_t start = pos;
        if (scan::HasNegativeSign(text, pos)) {
          start = pos - 1;
          words = lexicon.negative_word + " " + words;
        }
        edits.push_back(Edit{start, end, std::move(words)});
      } catch (const Error&) {
        // Unreadable tokens stay as written.
      }
    }
    pos = end;
  }
  return edits;
}

std::string NormalizeNumbers(std::string_view text) {
  return ApplyEdits(text, FindNumbers(text), PassId::kNumber, nullptr);
}

}  // namespace vntn

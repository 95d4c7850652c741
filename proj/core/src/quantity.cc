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

#include "vntn/quantity.h"

#include <cstddef>
#include <optional>
#include <string>

#include "scan.h"
#include "vntn/error.h"
#include "vntn/unicode.h"

namespace vntn {
namespace {

constexpr std::string_view kDongWord = "đồng";
constexpr std::string_view kDollarWord = "đô la";
constexpr std::string_view kPercentWord = "phần trăm";

struct Suffix {
  std::u32string_view lowered;
  std::string_view reading;
};

// Longest first, so "đồng" is preferred over "đ".
constexpr Suffix kSuffixes[] = {
    {U"đồng", kDongWord}, {U"dong", kDongWord}, {U"vnđ", kDongWord},
    {U"vnd", kDongWord},  {U"usd", kDollarWord}, {U"đ", kDongWord},
    {U"₫", kDongWord},
};

// Returns the end of `lowered` matched case-insensitively at pos.
std::optional<std::size_t> MatchFolded(std::string_view text, std::size_t pos,
                                       std::u32string_view lowered) {
  for (char32_t expected : lowered) {
    if (pos >= text.size()) return std::nullopt;
    if (unicode::ToLower(unicode::DecodeNext(text, &pos)) != expected) {
      return std::nullopt;
    }
  }
  return pos;
}

struct SuffixMatch {
  std::size_t end;
  std::string_view reading;
};

std::optional<SuffixMatch> MatchSuffix(std::string_view text, std::size_t pos) {
  if (pos < text.size() && text[pos] == ' ') ++pos;
  for (const Suffix& s : kSuffixes) {
    std::optional<std::size_t> end = MatchFolded(text, pos, s.lowered);
    if (end && !scan::AttachedAt(text, *end)) {
      return SuffixMatch{*end, s.reading};
    }
  }
  return std::nullopt;
}

// A number token starting at pos that is not glued to a word on its left.
struct NumberMatch {
  std::size_t end;
  std::string words;
};

std::optional<NumberMatch> MatchNumber(std::string_view text, std::size_t pos,
                                       const Lexicon& lexicon) {
  if (!scan::DigitAt(text, pos)) return std::nullopt;
  const std::size_t end = scan::NumberRunEnd(text, pos);
  try {
    return NumberMatch{end,
                       VerbalizeNumber(ParseNumberToken(text.substr(pos, end - pos)),
                                       lexicon)};
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool AtTokenStart(std::string_view text, std::size_t pos) {
  return !scan::WordCharBefore(text, pos) && !scan::JoinedOnLeft(text, pos, ".,");
}

std::string Join(std::string_view a, std::string_view b) {
  std::string out(a);
  out.push_back(' ');
  out.append(b);
  return out;
}

}  // namespace

std::vector<Edit> FindCurrency(std::string_view text, const Lexicon& lexicon) {
  std::vector<Edit> edits;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '$' && AtTokenStart(text, pos)) {
      if (std::optional<NumberMatch> number =
              MatchNumber(text, pos + 1, lexicon);
          number && !scan::AttachedAt(text, number->end)) {
        edits.push_back(Edit{pos, number->end, Join(number->words, kDollarWord)});
        pos = number->end;
        continue;
      }
      ++pos;
      continue;
    }
    if (!scan::DigitAt(text, pos) ||
        (pos > 0 && scan::IsAsciiDigit(text[pos - 1]))) {
      ++pos;
      continue;
    }
    const std::size_t run_end = scan::NumberRunEnd(text, pos);
    if (AtTokenStart(text, pos)) {
      if (std::optional<NumberMatch> number = MatchNumber(text, pos, lexicon)) {
        if (std::optional<SuffixMatch> suffix = MatchSuffix(text, number->end)) {
          edits.push_back(
              Edit{pos, suffix->end, Join(number->words, suffix->reading)});
          pos = suffix->end;
          continue;
        }
      }
    }
    pos = run_end;
  }
  return edits;
}

std::vector<Edit> FindPercent(std::string_view text, const Lexicon& lexicon) {
  std::vector<Edit> edits;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!scan::DigitAt(text, pos) ||
        (pos > 0 && scan::IsAsciiDigit(text[pos - 1]))) {
      ++pos;
      continue;
    }
    const std::size_t run_end = scan::NumberRunEnd(text, pos);
    if (AtTokenStart(text, pos)) {
      if (std::optional<NumberMatch> number = MatchNumber(text, pos, lexicon)) {
        std::size_t end = number->end;
        if (end < text.size() && text[end] == ' ') ++end;
        if (end < text.size() && text[end] == '%' &&
            !scan::FusingMarkAt(text, end + 1)) {
          std::size_t start = pos;
          std::string words = Join(number->words, kPercentWord);
          if (scan::HasNegativeSign(text, pos)) {
            start = pos - 1;
            words = Join(lexicon.negative_word, words);
          }
          edits.push_back(Edit{start, end + 1, std::move(words)});
          pos = end + 1;
          continue;
        }
      }
    }
    pos = run_end;
  }
  return edits;
}

std::string NormalizeCurrency(std::string_view text) {
  return ApplyEdits(text, FindCurrency(text), PassId::kCurrency, nullptr);
}

std::string NormalizePercent(std::string_view text) {
  return ApplyEdits(text, FindPercent(text), PassId::kPercent, nullptr);
}

}  // namespace vntn

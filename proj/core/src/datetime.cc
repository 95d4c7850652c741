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

#include "vntn/datetime.h"

#include <cstddef>
#include <string>

#include "scan.h"

namespace vntn {
namespace {

constexpr std::string_view kDayWord = "ngày";
constexpr std::string_view kMonthWord = "tháng";
constexpr std::string_view kYearWord = "năm";
constexpr std::string_view kMonthFourWord = "tư";
constexpr std::string_view kHourWord = "giờ";
constexpr std::string_view kMinuteWord = "phút";
constexpr std::string_view kSecondWord = "giây";

// Joiners that make a neighbouring digit part of the same numeric token.
constexpr std::string_view kTimeJoiners = ":.,/";

int ToInt(std::string_view digits) {
  int value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

struct Match {
  std::size_t end = 0;
  std::string replacement;
};

std::optional<Match> MatchDate(std::string_view text, std::size_t pos,
                               const Lexicon& lexicon) {
  if (scan::WordCharBefore(text, pos)) return std::nullopt;
  const std::size_t day_end = scan::DigitRunEnd(text, pos);
  if (day_end - pos > 2 || day_end >= text.size()) return std::nullopt;
  const char sep = text[day_end];
  if (sep != '/' && sep != '-' && sep != '.') return std::nullopt;
  const std::size_t month_start = day_end + 1;
  const std::size_t month_end = scan::DigitRunEnd(text, month_start);
  const std::size_t month_len = month_end - month_start;
  if (month_len < 1 || month_len > 2) return std::nullopt;

  DatePattern date;
  date.separator = sep;
  date.day = ToInt(text.substr(pos, day_end - pos));
  date.month = ToInt(text.substr(month_start, month_len));
  std::size_t end = month_end;
  if (end < text.size() && text[end] == sep && scan::DigitAt(text, end + 1)) {
    const std::size_t year_end = scan::DigitRunEnd(text, end + 1);
    if (year_end - (end + 1) > 4) return std::nullopt;
    date.year = ToInt(text.substr(end + 1, year_end - (end + 1)));
    end = year_end;
  }
  if (sep == '.' && !date.year) return std::nullopt;

  std::string joiners = "/.,:";
  if (sep == '-') joiners.push_back('-');
  if (scan::JoinedOnLeft(text, pos, joiners)) return std::nullopt;
  if (scan::AttachedAt(text, end)) return std::nullopt;
  if (scan::JoinedOnRight(text, end, joiners)) return std::nullopt;
  if (!date.IsValid()) return std::nullopt;
  return Match{end, VerbalizeDate(date, lexicon)};
}

std::optional<Match> MatchTime(std::string_view text, std::size_t pos,
                               const Lexicon& lexicon) {
  if (scan::WordCharBefore(text, pos)) return std::nullopt;
  if (scan::JoinedOnLeft(text, pos, kTimeJoiners)) return std::nullopt;
  const std::size_t hour_end = scan::DigitRunEnd(text, pos);
  if (hour_end - pos > 2 || hour_end >= text.size() || text[hour_end] != ':') {
    return std::nullopt;
  }
  const std::size_t minute_end = scan::DigitRunEnd(text, hour_end + 1);
  if (minute_end - (hour_end + 1) != 2) return std::nullopt;

  TimePattern time;
  time.hour = ToInt(text.substr(pos, hour_end - pos));
  time.minute = ToInt(text.substr(hour_end + 1, 2));
  std::size_t end = minute_end;
  if (end < text.size() && text[end] == ':' && scan::DigitAt(text, end + 1)) {
    const std::size_t second_end = scan::DigitRunEnd(text, end + 1);
    if (second_end - (end + 1) != 2) return std::nullopt;
    time.second = ToInt(text.substr(end + 1, 2));
    end = second_end;
  }
  if (scan::AttachedAt(text, end)) return std::nullopt;
  if (scan::JoinedOnRight(text, end, kTimeJoiners)) return std::nullopt;
  if (!time.IsValid()) return std::nullopt;
  return Match{end, VerbalizeTime(time, lexicon)};
}

template <typename Matcher>
std::vector<Edit> FindAll(std::string_view text, Matcher match) {
  std::vector<Edit> edits;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!scan::DigitAt(text, pos) ||
        (pos > 0 && scan::IsAsciiDigit(text[pos - 1]))) {
      ++pos;
      continue;
    }
    if (std::optional<Match> m = match(text, pos)) {
      edits.push_back(Edit{pos, m->end, std::move(m->replacement)});
      pos = m->end;
    } else {
      pos = scan::DigitRunEnd(text, pos);
    }
  }
  return edits;
}

void AppendWords(std::string_view words, std::string* out) {
  if (!out->empty()) out->push_back(' ');
  out->append(words);
}

}  // namespace

bool DatePattern::IsValid() const {
  return day >= 1 && day <= 31 && month >= 1 && month <= 12 &&
         (!year || (*year >= 1 && *year <= 9999));
}

bool TimePattern::IsValid() const {
  return hour >= 0 && hour <= 23 && minute >= 0 && minute <= 59 &&
         (!second || (*second >= 0 && *second <= 59));
}

std::string VerbalizeDate(const DatePattern& date, const Lexicon& lexicon) {
  std::string out;
  AppendWords(kDayWord, &out);
  AppendWords(VerbalizeInteger(date.day, lexicon), &out);
  AppendWords(kMonthWord, &out);
  AppendWords(date.month == 4 ? std::string(kMonthFourWord)
                              : VerbalizeInteger(date.month, lexicon),
              &out);
  if (date.year) {
    AppendWords(kYearWord, &out);
    AppendWords(VerbalizeInteger(*date.year, lexicon), &out);
  }
  return out;
}

std::string VerbalizeTime(const TimePattern& time, const Lexicon& lexicon) {
  std::string out;
  AppendWords(VerbalizeInteger(time.hour, lexicon), &out);
  AppendWords(kHourWord, &out);
  if (time.minute != 0 || time.second) {
    AppendWords(VerbalizeInteger(time.minute, lexicon), &out);
    AppendWords(kMinuteWord, &out);
  }
  if (time.second) {
    AppendWords(VerbalizeInteger(*time.second, lexicon), &out);
    AppendWords(kSecondWord, &out);
  }
  return out;
}

std::vector<Edit> FindDates(std::string_view text, const Lexicon& lexicon) {
  return FindAll(text, [&](std::string_view t, std::size_t pos) {
    return MatchDate(t, pos, lexicon);
  });
}

std::vector<Edit> FindTimes(std::string_view text, const Lexicon& lexicon) {
  return FindAll(text, [&](std::string_view t, std::size_t pos) {
    return MatchTime(t, pos, lexicon);
  });
}

std::string NormalizeDates(std::string_view text) {
  return ApplyEdits(text, FindDates(text), PassId::kDate, nullptr);
}

std::string NormalizeTimes(std::string_view text) {
  return ApplyEdits(text, FindTimes(text), PassId::kTime, nullptr);
}

}  // namespace vntn

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

// Passes 2 and 3: calendar dates and clock times.

#ifndef VNTN_DATETIME_H_
#define VNTN_DATETIME_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vntn/numverb.h"
#include "vntn/trace.h"

namespace vntn {

struct DatePattern {
  int day = 1;                // 1..31
  int month = 1;              // 1..12
  std::optional<int> year;    // 1..9999
  char separator = '/';       // '/', '-' or '.'

  // Range check only; 31/02 is accepted.
  bool IsValid() const;
};

struct TimePattern {
  int hour = 0;               // 0..23
  int minute = 0;             // 0..59
  std::optional<int> second;  // 0..59

  bool IsValid() const;
};

// "ngày <day> tháng <month>[ năm <year>]". Month 4 reads "tư".
std::string VerbalizeDate(const DatePattern& date,
                          const Lexicon& lexicon = Lexicon::Vietnamese());

// "<hour> giờ[ <minute> phút][ <second> giây]". The minute segment is
// omitted for 0 minutes when there is no seconds field.
std::string VerbalizeTime(const TimePattern& time,
                          const Lexicon& lexicon = Lexicon::Vietnamese());

// Matches DD<sep>MM<sep>YYYY and DD<sep>MM. Both separators must agree, '.'
// requires a year, and out-of-range fields reject the whole token.
std::vector<Edit> FindDates(std::string_view text,
                            const Lexicon& lexicon = Lexicon::Vietnamese());

// Matches H:MM and H:MM:SS with one- or two-digit hours.
std::vector<Edit> FindTimes(std::string_view text,
                            const Lexicon& lexicon = Lexicon::Vietnamese());

std::string NormalizeDates(std::string_view text);
std::string NormalizeTimes(std::string_view text);

}  // namespace vntn

#endif  // VNTN_DATETIME_H_

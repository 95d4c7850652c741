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

#ifndef VNTN_TRACE_H_
#define VNTN_TRACE_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vntn {

// The seven normalization passes, in execution order.
enum class PassId {
  kClean = 1,
  kDate = 2,
  kTime = 3,
  kCurrency = 4,
  kPercent = 5,
  kNumber = 6,
  kDictionary = 7,
};

inline constexpr PassId kAllPasses[] = {
    PassId::kClean,  PassId::kDate,   PassId::kTime,       PassId::kCurrency,
    PassId::kPercent, PassId::kNumber, PassId::kDictionary,
};

// "clean", "date", ... as used in traces and JSON output.
std::string_view PassName(PassId pass);

// A replacement of the byte range [start, end) of some text.
struct Edit {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string replacement;
};

// One audited change. start/end are byte offsets into the text as it was
// when `pass` began, so records of one pass never refer to another pass's
// coordinates.
struct TraceRecord {
  PassId pass = PassId::kClean;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string original;
  std::string replacement;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

// Applies sorted, non-overlapping edits to `text`. When `trace` is non-null a
// record is appended for every edit.
std::string ApplyEdits(std::string_view text, std::span<const Edit> edits,
                       PassId pass, std::vector<TraceRecord>* trace);

// Rebuilds the output of a normalization by applying the records pass by
// pass. Throws FormatError if a record's original text does not match the
// text it claims to replace.
std::string ReplayTrace(std::string_view input,
                        std::span<const TraceRecord> trace);

}  // namespace vntn

#endif  // VNTN_TRACE_H_

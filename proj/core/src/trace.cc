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

#include "vntn/trace.h"

#include "vntn/error.h"

namespace vntn {

std::string_view PassName(PassId pass) {
  switch (pass) {
    case PassId::kClean:
      return "clean";
    case PassId::kDate:
      return "date";
    case PassId::kTime:
      return "time";
    case PassId::kCurrency:
      return "currency";
    case PassId::kPercent:
      return "percent";
    case PassId::kNumber:
      return "number";
    case PassId::kDictionary:
      return "dictionary";
  }
  return "unknown";
}

std::string ApplyEdits(std::string_view text, std::span<const Edit> edits,
                       PassId pass, std::vector<TraceRecord>* trace) {
  if (edits.empty()) return std::string(text);
  std::string out;
  out.reserve(text.size() + text.size() / 2);
  std::size_t cursor = 0;
  for (const Edit& e : edits) {
    out.append(text.substr(cursor, e.start - cursor));
    out.append(e.replacement);
    if (trace != nullptr) {
      trace->push_back(TraceRecord{pass, e.start, e.end,
                                   std::string(text.substr(e.start, e.end - e.start)),
                                   e.replacement});
    }
    cursor = e.end;
  }
  out.append(text.substr(cursor));
  return out;
}

std::string ReplayTrace(std::string_view input,
                        std::span<const TraceRecord> trace) {
  std::string text(input);
  std::size_t i = 0;
  while (i < trace.size()) {
    const PassId pass = trace[i].pass;
    std::string next;
    std::size_t cursor = 0;
    for (; i < trace.size() && trace[i].pass == pass; ++i) {
      const TraceRecord& r = trace[i];
      if (r.start < cursor || r.end < r.start || r.end > text.size() ||
          text.compare(r.start, r.end - r.start, r.original) != 0) {
        throw FormatError("trace record for pass " +
                          std::string(PassName(pass)) + " at [" +
                          std::to_string(r.start) + ", " +
                          std::to_string(r.end) + ") does not match its input");
      }
      next.append(text, cursor, r.start - cursor);
      next.append(r.replacement);
      cursor = r.end;
    }
    next.append(text, cursor, std::string::npos);
    text = std::move(next);
  }
  return text;
}

}  // namespace vntn

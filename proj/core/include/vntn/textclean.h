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

#ifndef VNTN_TEXTCLEAN_H_
#define VNTN_TEXTCLEAN_H_

#include <string>
#include <string_view>

namespace vntn {

struct CleanPolicy {
  // Drop the emoji blocks, variation selectors U+FE0E/U+FE0F and U+200D.
  bool strip_emoji = true;
  // Drop C0/C1 controls other than '\n' and '\t'.
  bool strip_control = true;
  // Collapse runs of spaces/tabs (and other Zs) to one ASCII space and trim
  // every line.
  bool collapse_whitespace = true;

  friend bool operator==(const CleanPolicy&, const CleanPolicy&) = default;
};

bool IsEmojiCodepoint(char32_t cp);

// Pass 1. Removes characters per `policy`, converts to NFC and tidies
// whitespace. Newlines are always kept, so the line count is preserved.
std::string Clean(std::string_view text, const CleanPolicy& policy = {});

}  // namespace vntn

#endif  // VNTN_TEXTCLEAN_H_

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

#include "vntn/textclean.h"

#include <cstddef>

#include "vntn/unicode.h"

namespace vntn {
namespace {

struct Block {
  char32_t first;
  char32_t last;
};

constexpr Block kEmojiBlocks[] = {
    {0x1F300, 0x1F5FF},  // Miscellaneous Symbols and Pictographs
    {0x1F600, 0x1F64F},  // Emoticons
    {0x1F680, 0x1F6FF},  // Transport and Map Symbols
    {0x1F900, 0x1F9FF},  // Supplemental Symbols and Pictographs
    {0x1F1E6, 0x1F1FF},  // Regional indicators
    {0x2600, 0x26FF},    // Miscellaneous Symbols
    {0x2700, 0x27BF},    // Dingbats
    {0xFE0E, 0xFE0F},    // Variation selectors
    {0x200D, 0x200D},    // Zero-width joiner
};

bool IsControl(char32_t cp) {
  return cp < 0x20 || (cp >= 0x7F && cp <= 0x9F);
}

bool IsBlank(char32_t cp) {
  return cp == ' ' || cp == '\t' || unicode::IsSpaceSeparator(cp);
}

std::string StripCharacters(std::string_view text, const CleanPolicy& policy) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = unicode::DecodeNext(text, &pos);
    if (policy.strip_control && IsControl(cp) && cp != '\n' && cp != '\t') {
      continue;
    }
    if (policy.strip_emoji && IsEmojiCodepoint(cp)) continue;
    if (cp == unicode::kReplacementChar) {
      unicode::AppendUtf8(cp, &out);  // also repairs invalid UTF-8
    } else {
      out.append(text.substr(start, pos - start));
    }
  }
  return out;
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool line_start = true;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = unicode::DecodeNext(text, &pos);
    if (cp == '\n') {
      out.push_back('\n');
      pending_space = false;
      line_start = true;
      continue;
    }
    if (IsBlank(cp)) {
      pending_space = !line_start;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    line_start = false;
    out.append(text.substr(start, pos - start));
  }
  return out;
}

}  // namespace

bool IsEmojiCodepoint(char32_t cp) {
  for (const Block& b : kEmojiBlocks) {
    if (cp >= b.first && cp <= b.last) return true;
  }
  return false;
}

// Removal runs before NFC: dropping a joiner between a base letter and a
// combining mark can create a new composition.
std::string Clean(std::string_view text, const CleanPolicy& policy) {
  std::string stripped = StripCharacters(text, policy);
  std::string composed = unicode::Nfc(stripped);
  if (!policy.collapse_whitespace) return composed;
  return CollapseWhitespace(composed);
}

}  // namespace vntn

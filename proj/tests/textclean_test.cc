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

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "test_util.h"
#include "vntn/unicode.h"

namespace vntn {
namespace {

TEST(CleanTest, RemovesEmoji) {
  EXPECT_EQ(Clean("xin chào 😀"), "xin chào");
  EXPECT_EQ(Clean("☀️ trời nắng 🚀🇻🇳"), "trời nắng");
  EXPECT_EQ(Clean("a‍b"), "ab");
}

TEST(CleanTest, EmptyStaysEmpty) { EXPECT_EQ(Clean(""), ""); }

TEST(CleanTest, ComposesToNfc) {
  EXPECT_EQ(Clean("café"), "café");
  EXPECT_EQ(Clean("Tiếng Việt"), "Tiếng Việt");
}

TEST(CleanTest, RemovalHappensBeforeComposition) {
  // The joiner separates the base letter from its accent until removed.
  EXPECT_EQ(Clean("e‍́"), "é");
}

TEST(CleanTest, ControlsDroppedExceptNewlineAndTab) {
  EXPECT_EQ(Clean("a\x01\x7F" "b\r\nc"), "ab\nc");
  EXPECT_EQ(Clean("a\u0085b"), "ab");
  CleanPolicy keep_ws;
  keep_ws.collapse_whitespace = false;
  EXPECT_EQ(Clean("a\tb\x02", keep_ws), "a\tb");
}

TEST(CleanTest, WhitespaceCollapsedAndTrimmedPerLine) {
  EXPECT_EQ(Clean("  a \t  b  \n\t c  "), "a b\nc");
  EXPECT_EQ(Clean("a  b"), "a b");
  EXPECT_EQ(Clean("\n\n"), "\n\n");
}

TEST(CleanTest, PunctuationAndCasePreserved) {
  EXPECT_EQ(Clean("Xin chào, Việt Nam! (2023)"), "Xin chào, Việt Nam! (2023)");
}

TEST(CleanTest, PolicyFlagsDisableSteps) {
  CleanPolicy policy;
  policy.strip_emoji = false;
  policy.strip_control = false;
  policy.collapse_whitespace = false;
  EXPECT_EQ(Clean(" 😀\x01  é ", policy), " 😀\x01  é ");
}

TEST(CleanTest, EmojiBlocks) {
  for (char32_t cp : std::u32string{0x1F300, 0x1F5FF, 0x1F600, 0x1F64F, 0x1F680, 0x1F6FF,
                      0x1F900, 0x1F9FF, 0x1F1E6, 0x1F1FF, 0x2600, 0x26FF,
                      0x2700, 0x27BF, 0xFE0E, 0xFE0F, 0x200D}) {
    EXPECT_TRUE(IsEmojiCodepoint(cp)) << std::hex << static_cast<std::uint32_t>(cp);
  }
  for (char32_t cp : std::u32string{0x1F2FF, 0x1F700, 0x25FF, 0x27C0, U'ệ', U'đ', U'₫'}) {
    EXPECT_FALSE(IsEmojiCodepoint(cp)) << std::hex << static_cast<std::uint32_t>(cp);
  }
}

class CleanPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(CleanPropertyTest, InvariantsHoldOnRandomText) {
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 500; ++i) {
    const std::string input = testing::RandomMessyText(rng, 40);
    const std::string once = Clean(input);
    EXPECT_EQ(Clean(once), once) << input;
    EXPECT_TRUE(unicode::IsNfc(once)) << input;
    EXPECT_LE(unicode::CountScalars(once), unicode::CountScalars(input));
    for (char32_t cp : unicode::ToCodepoints(once)) {
      EXPECT_FALSE(IsEmojiCodepoint(cp));
      EXPECT_TRUE(cp >= 0x20 || cp == '\n') << std::hex << static_cast<std::uint32_t>(cp);
      EXPECT_FALSE(cp >= 0x7F && cp <= 0x9F);
    }
    EXPECT_EQ(std::count(input.begin(), input.end(), '\n'),
              std::count(once.begin(), once.end(), '\n'));
    EXPECT_EQ(once.find("  "), std::string::npos);
    EXPECT_EQ(once.find(" \n"), std::string::npos);
    EXPECT_EQ(once.find("\n "), std::string::npos);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, CleanPropertyTest, ::testing::Range(1, 5));

}  // namespace
}  // namespace vntn

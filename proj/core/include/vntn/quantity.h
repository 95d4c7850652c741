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

// Passes 4 and 5: money amounts and percentages.

#ifndef VNTN_QUANTITY_H_
#define VNTN_QUANTITY_H_

#include <string>
#include <string_view>
#include <vector>

#include "vntn/numverb.h"
#include "vntn/trace.h"

namespace vntn {

// "<number> đồng|đ|₫|VND|VNĐ|dong" -> "<words> đồng";
// "$<number>" and "<number> USD" -> "<words> đô la".
// Suffixes match case-insensitively and may be separated from the number by
// at most one space.
std::vector<Edit> FindCurrency(std::string_view text,
                               const Lexicon& lexicon = Lexicon::Vietnamese());

// "<number>%" (optionally "<number> %", optionally negative) ->
// "<words> phần trăm".
std::vector<Edit> FindPercent(std::string_view text,
                              const Lexicon& lexicon = Lexicon::Vietnamese());

std::string NormalizeCurrency(std::string_view text);
std::string NormalizePercent(std::string_view text);

}  // namespace vntn

#endif  // VNTN_QUANTITY_H_

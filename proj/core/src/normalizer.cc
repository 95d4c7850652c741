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

#include "vntn/normalizer.h"

#include <algorithm>
#include <utility>

#include "vntn/datetime.h"
#include "vntn/numverb.h"
#include "vntn/quantity.h"

namespace vntn {
namespace {

bool IsContinuationByte(char c) {
  return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

// Minimal edit turning `before` into `after`, split on code point boundaries.
std::optional<Edit> LineEdit(std::string_view before, std::string_view after,
                             std::size_t offset) {
  if (before == after) return std::nullopt;
  std::size_t prefix = 0;
  const std::size_t limit = std::min(before.size(), after.size());
  while (prefix < limit && before[prefix] == after[prefix]) ++prefix;
  while (prefix > 0 && prefix < before.size() &&
         IsContinuationByte(before[prefix])) {
    --prefix;
  }
  std::size_t suffix = 0;
  while (suffix < limit - prefix &&
         before[before.size() - 1 - suffix] == after[after.size() - 1 - suffix]) {
    ++suffix;
  }
  while (suffix > 0 && IsContinuationByte(before[before.size() - suffix])) {
    --suffix;
  }
  return Edit{offset + prefix, offset + before.size() - suffix,
              std::string(after.substr(prefix, after.size() - prefix - suffix))};
}

}  // namespace

std::vector<Edit> FindCleanEdits(std::string_view text,
                                 const CleanPolicy& policy) {
  std::vector<Edit> edits;
  const std::string cleaned = Clean(text, policy);
  if (cleaned == text) return edits;
  // Clean keeps every '\n', so lines correspond one to one.
  std::size_t in_pos = 0;
  std::size_t out_pos = 0;
  while (true) {
    const std::size_t in_end = std::min(text.find('\n', in_pos), text.size());
    const std::size_t out_end =
        std::min(cleaned.find('\n', out_pos), cleaned.size());
    if (std::optional<Edit> e = LineEdit(
            text.substr(in_pos, in_end - in_pos),
            std::string_view(cleaned).substr(out_pos, out_end - out_pos),
            in_pos)) {
      edits.push_back(std::move(*e));
    }
    if (in_end >= text.size() || out_end >= cleaned.size()) break;
    in_pos = in_end + 1;
    out_pos = out_end + 1;
  }
  return edits;
}

Normalizer::Normalizer(NormalizerConfig config)
    : config_(std::move(config)),
      store_(DictionarySet::Load(config_.acronyms_path, config_.loanwords_path,
                                 config_.lowercase_expansions)) {}

std::string Normalizer::Run(std::string_view input, bool enable_preprocessing,
                            std::vector<TraceRecord>* trace) const {
  // One snapshot per call: a concurrent reload is seen entirely or not at all.
  const std::shared_ptr<const DictionarySet> dictionaries = store_.Snapshot();
  const Lexicon& lexicon = Lexicon::Vietnamese();

  std::string text;
  if (trace != nullptr) {
    text = ApplyEdits(input, FindCleanEdits(input, config_.clean_policy),
                      PassId::kClean, trace);
  } else {
    text = Clean(input, config_.clean_policy);
  }
  if (enable_preprocessing) {
    text = ApplyEdits(text, FindDates(text, lexicon), PassId::kDate, trace);
    text = ApplyEdits(text, FindTimes(text, lexicon), PassId::kTime, trace);
    text = ApplyEdits(text, FindCurrency(text, lexicon), PassId::kCurrency,
                      trace);
    text = ApplyEdits(text, FindPercent(text, lexicon), PassId::kPercent, trace);
    text = ApplyEdits(text, FindNumbers(text, lexicon), PassId::kNumber, trace);
  }
  return ApplyEdits(text, dictionaries->compiled.FindEdits(text),
                    PassId::kDictionary, trace);
}

NormalizationResult Normalizer::Normalize(std::string_view text,
                                          bool enable_preprocessing) const {
  NormalizationResult result;
  result.text = Run(text, enable_preprocessing, &result.trace);
  return result;
}

std::string Normalizer::NormalizeText(std::string_view text,
                                      bool enable_preprocessing) const {
  return Run(text, enable_preprocessing, nullptr);
}

void Normalizer::ReloadDictionaries(
    const std::optional<std::filesystem::path>& acronyms_path,
    const std::optional<std::filesystem::path>& loanwords_path) {
  std::lock_guard<std::mutex> lock(reload_mu_);
  store_.Install(Reload(*store_.Snapshot(), acronyms_path, loanwords_path));
}

}  // namespace vntn

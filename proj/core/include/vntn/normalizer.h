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

// The public entry point: a configured, thread-safe normalizer running the
// seven passes in order (clean, date, time, currency, percent, number,
// dictionary).
//
//   vntn::Normalizer normalizer;
//   normalizer.Normalize("Toi co 123 quyen sach").text
//       // "Toi co một trăm hai mươi ba quyen sach"

#ifndef VNTN_NORMALIZER_H_
#define VNTN_NORMALIZER_H_

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vntn/dictionary.h"
#include "vntn/textclean.h"
#include "vntn/trace.h"

namespace vntn {

struct NormalizerConfig {
  // Unset paths select the built-in dictionaries.
  std::optional<std::filesystem::path> acronyms_path;
  std::optional<std::filesystem::path> loanwords_path;
  CleanPolicy clean_policy;
  // Lowercase dictionary replacements. Number, date and time readings are
  // always lowercase; untouched input keeps its case.
  bool lowercase_expansions = true;
};

struct NormalizationResult {
  std::string text;
  // Every change, grouped by pass in pipeline order. ReplayTrace(input,
  // trace) == text.
  std::vector<TraceRecord> trace;
};

class Normalizer {
 public:
  // Loads and compiles the dictionaries. Throws ConfigError or ParseError.
  explicit Normalizer(NormalizerConfig config = {});

  Normalizer(const Normalizer&) = delete;
  Normalizer& operator=(const Normalizer&) = delete;

  // With enable_preprocessing == false only the clean and dictionary passes
  // run.
  NormalizationResult Normalize(std::string_view text,
                                bool enable_preprocessing = true) const;

  // Same output as Normalize(...).text without building a trace.
  std::string NormalizeText(std::string_view text,
                            bool enable_preprocessing = true) const;

  // Replaces the given dictionaries; an unset path keeps the current one.
  // On failure the previous dictionaries stay installed and the error is
  // rethrown. Safe to call while other threads are normalizing.
  void ReloadDictionaries(
      const std::optional<std::filesystem::path>& acronyms_path,
      const std::optional<std::filesystem::path>& loanwords_path = std::nullopt);

  const NormalizerConfig& config() const { return config_; }
  std::shared_ptr<const DictionarySet> dictionaries() const {
    return store_.Snapshot();
  }

 private:
  std::string Run(std::string_view text, bool enable_preprocessing,
                  std::vector<TraceRecord>* trace) const;

  NormalizerConfig config_;
  DictionaryStore store_;
  std::mutex reload_mu_;  // serializes ReloadDictionaries
};

// Edits turning `text` into Clean(text, policy), at most one per line.
std::vector<Edit> FindCleanEdits(std::string_view text,
                                 const CleanPolicy& policy = {});

}  // namespace vntn

#endif  // VNTN_NORMALIZER_H_

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

// Acronym and loanword dictionaries.
//
// Both dictionaries are compiled into one character trie that is walked
// from every token start, so the cost of a scan depends on the input length
// and the longest key, not on the number of keys. At each start the longest
// key that ends on a token boundary wins; replaced text is never rescanned.

#ifndef VNTN_DICTIONARY_H_
#define VNTN_DICTIONARY_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vntn/trace.h"

namespace vntn {

struct DictionaryEntry {
  std::string key;
  std::string value;

  friend bool operator==(const DictionaryEntry&, const DictionaryEntry&) = default;
};

struct CsvDictionary {
  std::vector<DictionaryEntry> entries;
  std::vector<std::string> warnings;  // e.g. duplicate keys
};

// Parses "key,value" rows with RFC 4180 quoting. A leading "word,replacement"
// header and blank lines are skipped; extra columns are ignored. Duplicate
// keys keep the first position and the last value. Keys and values are
// converted to NFC. `source` names the input in errors and warnings.
// Throws ParseError for a row with fewer than two fields, an empty key, or
// an unterminated quote.
CsvDictionary ParseCsv(std::string_view content, std::string_view source);

// Throws ConfigError if the file cannot be read, ParseError as above.
CsvDictionary LoadCsv(const std::filesystem::path& path);

// The dictionaries compiled into the library.
std::string_view BuiltinAcronymsCsv();
std::string_view BuiltinLoanwordsCsv();

enum class MatchCase { kSensitive, kInsensitive };

// One dictionary fed to Compile. Earlier sources win key collisions.
struct DictionarySource {
  std::span<const DictionaryEntry> entries;
  MatchCase match_case = MatchCase::kSensitive;
  std::string name;
};

struct DictionaryReplacement {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string key;
  std::string value;
};

class CompiledDictionary {
 public:
  // Matches nothing.
  CompiledDictionary();

  static CompiledDictionary Compile(std::span<const DictionarySource> sources,
                                    bool lowercase_values = false);

  // Single dictionary convenience.
  static CompiledDictionary Compile(std::span<const DictionaryEntry> entries,
                                    MatchCase match_case = MatchCase::kSensitive);

  // Non-overlapping replacements, left to right.
  std::vector<DictionaryReplacement> Find(std::string_view text) const;

  std::string Apply(std::string_view text,
                    std::vector<DictionaryReplacement>* records = nullptr) const;

  std::vector<Edit> FindEdits(std::string_view text) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Collisions and values that would be changed again by a second pass.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  struct Entry {
    std::string key;
    std::string value;
    MatchCase match_case;
  };

  // Returns the child of `node` on `cp`, or -1.
  std::int32_t Child(std::int32_t node, char32_t cp) const;
  std::int32_t AddChild(std::int32_t node, char32_t cp);
  void Insert(std::size_t entry_index);
  std::optional<DictionaryReplacement> MatchAt(std::string_view text,
                                               std::size_t pos) const;

  std::vector<Entry> entries_;
  // Trie over lowercased keys. node_entries_[n] lists entry indices ending at
  // node n, in priority order.
  std::unordered_map<std::uint64_t, std::int32_t> children_;
  std::vector<std::vector<std::uint32_t>> node_entries_;
  std::vector<std::string> warnings_;
};

// An immutable, fully compiled pair of dictionaries.
struct DictionarySet {
  std::vector<DictionaryEntry> acronyms;
  std::vector<DictionaryEntry> loanwords;
  std::string acronyms_source;
  std::string loanwords_source;
  bool lowercase_values = true;
  CompiledDictionary compiled;
  std::vector<std::string> warnings;  // load and compile warnings

  // Acronyms match case-sensitively and win collisions; loanwords match
  // case-insensitively.
  static std::shared_ptr<const DictionarySet> Build(
      CsvDictionary acronyms, std::string acronyms_source,
      CsvDictionary loanwords, std::string loanwords_source,
      bool lowercase_values);

  // Loads the given paths, or the built-in dictionaries for unset ones.
  static std::shared_ptr<const DictionarySet> Load(
      const std::optional<std::filesystem::path>& acronyms_path,
      const std::optional<std::filesystem::path>& loanwords_path,
      bool lowercase_values);
};

// Builds a new set from `current` with the given dictionaries replaced. The
// other dictionary is carried over unchanged. Throws ConfigError when both
// paths are unset, and ConfigError/ParseError on load failure.
std::shared_ptr<const DictionarySet> Reload(
    const DictionarySet& current,
    const std::optional<std::filesystem::path>& acronyms_path,
    const std::optional<std::filesystem::path>& loanwords_path);

// Holds the active DictionarySet. Readers take a snapshot and keep using it
// for a whole call, so a concurrent Install is seen entirely or not at all.
class DictionaryStore {
 public:
  explicit DictionaryStore(std::shared_ptr<const DictionarySet> initial);

  std::shared_ptr<const DictionarySet> Snapshot() const;
  void Install(std::shared_ptr<const DictionarySet> next);

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const DictionarySet> current_;
};

}  // namespace vntn

#endif  // VNTN_DICTIONARY_H_

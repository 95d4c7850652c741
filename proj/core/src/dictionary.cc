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

#include "vntn/dictionary.h"

#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "scan.h"
#include "vntn/error.h"
#include "vntn/unicode.h"

namespace vntn {
namespace {

struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

std::string_view TrimBlanks(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<CsvRow> ParseRows(std::string_view content,
                              std::string_view source) {
  if (content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);
  std::vector<CsvRow> rows;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = content.size();
  while (i < n) {
    CsvRow row{line, {}};
    while (true) {
      std::string field;
      if (i < n && content[i] == '"') {
        const std::size_t quote_line = line;
        ++i;
        while (true) {
          if (i >= n) {
            throw ParseError(std::string(source), quote_line,
                             "unterminated quoted field");
          }
          const char c = content[i];
          if (c == '"') {
            if (i + 1 < n && content[i + 1] == '"') {
              field.push_back('"');
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          if (c == '\n') ++line;
          field.push_back(c);
          ++i;
        }
        while (i < n &&
               (content[i] == ' ' || content[i] == '\t' || content[i] == '\r')) {
          ++i;
        }
        if (i < n && content[i] != ',' && content[i] != '\n') {
          throw ParseError(std::string(source), line,
                           "unexpected character after quoted field");
        }
      } else {
        const std::size_t start = i;
        while (i < n && content[i] != ',' && content[i] != '\n') ++i;
        field = std::string(TrimBlanks(content.substr(start, i - start)));
      }
      row.fields.push_back(std::move(field));
      if (i < n && content[i] == ',') {
        ++i;
        continue;
      }
      if (i < n) ++i;  // '\n'
      ++line;
      break;
    }
    const bool blank = row.fields.size() == 1 && row.fields[0].empty();
    if (!blank) rows.push_back(std::move(row));
  }
  return rows;
}

bool IsHeader(const CsvRow& row) {
  return row.fields.size() >= 2 && unicode::ToLower(row.fields[0]) == "word" &&
         unicode::ToLower(row.fields[1]) == "replacement";
}

bool HasAsciiDigit(std::string_view s) {
  return s.find_first_of("0123456789") != std::string_view::npos;
}

}  // namespace

CsvDictionary ParseCsv(std::string_view content, std::string_view source) {
  CsvDictionary dict;
  std::unordered_map<std::string, std::size_t> index;
  const std::vector<CsvRow> rows = ParseRows(content, source);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (r == 0 && IsHeader(row)) continue;
    if (row.fields.size() < 2) {
      throw ParseError(std::string(source), row.line,
                       "expected two fields (key,value), found " +
                           std::to_string(row.fields.size()));
    }
    std::string key = unicode::Nfc(row.fields[0]);
    std::string value = unicode::Nfc(row.fields[1]);
    if (key.empty()) {
      throw ParseError(std::string(source), row.line, "empty key");
    }
    if (key.find('\n') != std::string::npos) {
      throw ParseError(std::string(source), row.line, "newline in key");
    }
    if (auto it = index.find(key); it != index.end()) {
      dict.warnings.push_back(std::string(source) + ":" +
                              std::to_string(row.line) + ": duplicate key \"" +
                              key + "\", last value wins");
      dict.entries[it->second].value = std::move(value);
      continue;
    }
    index.emplace(key, dict.entries.size());
    dict.entries.push_back(DictionaryEntry{std::move(key), std::move(value)});
  }
  return dict;
}

CsvDictionary LoadCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string(), "cannot open dictionary file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw ConfigError(path.string(), "error reading dictionary file");
  }
  return ParseCsv(buffer.str(), path.string());
}

CompiledDictionary::CompiledDictionary() : node_entries_(1) {}

std::int32_t CompiledDictionary::Child(std::int32_t node, char32_t cp) const {
  auto it = children_.find((static_cast<std::uint64_t>(node) << 21) | cp);
  return it == children_.end() ? -1 : it->second;
}

std::int32_t CompiledDictionary::AddChild(std::int32_t node, char32_t cp) {
  const std::uint64_t k = (static_cast<std::uint64_t>(node) << 21) | cp;
  auto [it, inserted] =
      children_.emplace(k, static_cast<std::int32_t>(node_entries_.size()));
  if (inserted) node_entries_.emplace_back();
  return it->second;
}

void CompiledDictionary::Insert(std::size_t entry_index) {
  const std::string& key = entries_[entry_index].key;
  std::int32_t node = 0;
  std::size_t pos = 0;
  while (pos < key.size()) {
    node = AddChild(node, unicode::ToLower(unicode::DecodeNext(key, &pos)));
  }
  node_entries_[node].push_back(static_cast<std::uint32_t>(entry_index));
}

CompiledDictionary CompiledDictionary::Compile(
    std::span<const DictionarySource> sources, bool lowercase_values) {
  CompiledDictionary dict;
  // Sensitive entries are identified by their exact key, insensitive ones by
  // the lowercased key.
  std::unordered_set<std::string> identities;
  std::unordered_map<std::string, std::string> first_by_folded_key;
  for (const DictionarySource& source : sources) {
    for (const DictionaryEntry& e : source.entries) {
      if (e.key.empty()) continue;
      const std::string folded = unicode::ToLower(e.key);
      const std::string identity = source.match_case == MatchCase::kSensitive
                                       ? "s:" + e.key
                                       : "i:" + folded;
      if (!identities.insert(identity).second) {
        dict.warnings_.push_back(source.name + ": key \"" + e.key +
                                 "\" is already defined; entry ignored");
        continue;
      }
      if (auto it = first_by_folded_key.find(folded);
          it != first_by_folded_key.end()) {
        dict.warnings_.push_back(source.name + ": key \"" + e.key +
                                 "\" overlaps \"" + it->second +
                                 "\", which takes precedence");
      } else {
        first_by_folded_key.emplace(folded, e.key);
      }
      dict.entries_.push_back(
          Entry{e.key, lowercase_values ? unicode::ToLower(e.value) : e.value,
                source.match_case});
      dict.Insert(dict.entries_.size() - 1);
    }
  }
  for (const Entry& e : dict.entries_) {
    for (const DictionaryReplacement& r : dict.Find(e.value)) {
      dict.warnings_.push_back("value of \"" + e.key + "\" contains key \"" +
                               r.key + "\"; a second pass would change it");
    }
    if (HasAsciiDigit(e.value)) {
      dict.warnings_.push_back("value of \"" + e.key + "\" contains digits");
    }
  }
  return dict;
}

CompiledDictionary CompiledDictionary::Compile(
    std::span<const DictionaryEntry> entries, MatchCase match_case) {
  const DictionarySource source{entries, match_case, "dictionary"};
  return Compile(std::span(&source, 1), /*lowercase_values=*/false);
}

std::optional<DictionaryReplacement> CompiledDictionary::MatchAt(
    std::string_view text, std::size_t pos) const {
  std::optional<DictionaryReplacement> best;
  std::int32_t node = 0;
  std::size_t q = pos;
  while (q < text.size()) {
    node = Child(node, unicode::ToLower(unicode::DecodeNext(text, &q)));
    if (node < 0) break;
    const std::vector<std::uint32_t>& candidates = node_entries_[node];
    if (candidates.empty() || scan::AttachedAt(text, q)) continue;
    const std::string_view matched = text.substr(pos, q - pos);
    for (std::uint32_t index : candidates) {
      const Entry& e = entries_[index];
      if (e.match_case == MatchCase::kSensitive && matched != e.key) continue;
      best = DictionaryReplacement{pos, q, e.key, e.value};
      break;
    }
  }
  return best;
}

std::vector<DictionaryReplacement> CompiledDictionary::Find(
    std::string_view text) const {
  std::vector<DictionaryReplacement> found;
  if (entries_.empty()) return found;
  bool after_word_char = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!after_word_char) {
      if (std::optional<DictionaryReplacement> m = MatchAt(text, pos)) {
        pos = m->end;
        after_word_char = unicode::IsWordChar(unicode::DecodePrev(text, pos));
        found.push_back(std::move(*m));
        continue;
      }
    }
    after_word_char = unicode::IsWordChar(unicode::DecodeNext(text, &pos));
  }
  return found;
}

std::vector<Edit> CompiledDictionary::FindEdits(std::string_view text) const {
  std::vector<Edit> edits;
  for (DictionaryReplacement& r : Find(text)) {
    edits.push_back(Edit{r.start, r.end, std::move(r.value)});
  }
  return edits;
}

std::string CompiledDictionary::Apply(
    std::string_view text, std::vector<DictionaryReplacement>* records) const {
  std::vector<DictionaryReplacement> found = Find(text);
  std::string out;
  out.reserve(text.size());
  std::size_t cursor = 0;
  for (const DictionaryReplacement& r : found) {
    out.append(text.substr(cursor, r.start - cursor));
    out.append(r.value);
    cursor = r.end;
  }
  out.append(text.substr(cursor));
  if (records != nullptr) *records = std::move(found);
  return out;
}

std::shared_ptr<const DictionarySet> DictionarySet::Build(
    CsvDictionary acronyms, std::string acronyms_source,
    CsvDictionary loanwords, std::string loanwords_source,
    bool lowercase_values) {
  auto set = std::make_shared<DictionarySet>();
  set->acronyms = std::move(acronyms.entries);
  set->loanwords = std::move(loanwords.entries);
  set->acronyms_source = std::move(acronyms_source);
  set->loanwords_source = std::move(loanwords_source);
  set->lowercase_values = lowercase_values;
  const DictionarySource sources[] = {
      {set->acronyms, MatchCase::kSensitive, set->acronyms_source},
      {set->loanwords, MatchCase::kInsensitive, set->loanwords_source},
  };
  set->compiled = CompiledDictionary::Compile(sources, lowercase_values);
  set->warnings = std::move(acronyms.warnings);
  set->warnings.insert(set->warnings.end(), loanwords.warnings.begin(),
                       loanwords.warnings.end());
  set->warnings.insert(set->warnings.end(), set->compiled.warnings().begin(),
                       set->compiled.warnings().end());
  return set;
}

namespace {

constexpr std::string_view kBuiltinAcronymsName = "<builtin>/acronyms.csv";
constexpr std::string_view kBuiltinLoanwordsName =
    "<builtin>/non_vietnamese_words.csv";

std::pair<CsvDictionary, std::string> LoadOrBuiltin(
    const std::optional<std::filesystem::path>& path, std::string_view builtin,
    std::string_view builtin_name) {
  if (path) return {LoadCsv(*path), path->string()};
  return {ParseCsv(builtin, builtin_name), std::string(builtin_name)};
}

}  // namespace

std::shared_ptr<const DictionarySet> DictionarySet::Load(
    const std::optional<std::filesystem::path>& acronyms_path,
    const std::optional<std::filesystem::path>& loanwords_path,
    bool lowercase_values) {
  auto [acronyms, acronyms_source] =
      LoadOrBuiltin(acronyms_path, BuiltinAcronymsCsv(), kBuiltinAcronymsName);
  auto [loanwords, loanwords_source] = LoadOrBuiltin(
      loanwords_path, BuiltinLoanwordsCsv(), kBuiltinLoanwordsName);
  return Build(std::move(acronyms), std::move(acronyms_source),
               std::move(loanwords), std::move(loanwords_source),
               lowercase_values);
}

std::shared_ptr<const DictionarySet> Reload(
    const DictionarySet& current,
    const std::optional<std::filesystem::path>& acronyms_path,
    const std::optional<std::filesystem::path>& loanwords_path) {
  if (!acronyms_path && !loanwords_path) {
    throw ConfigError("<reload>", "no dictionary path given");
  }
  CsvDictionary acronyms{current.acronyms, {}};
  std::string acronyms_source = current.acronyms_source;
  CsvDictionary loanwords{current.loanwords, {}};
  std::string loanwords_source = current.loanwords_source;
  if (acronyms_path) {
    acronyms = LoadCsv(*acronyms_path);
    acronyms_source = acronyms_path->string();
  }
  if (loanwords_path) {
    loanwords = LoadCsv(*loanwords_path);
    loanwords_source = loanwords_path->string();
  }
  return DictionarySet::Build(std::move(acronyms), std::move(acronyms_source),
                              std::move(loanwords), std::move(loanwords_source),
                              current.lowercase_values);
}

DictionaryStore::DictionaryStore(std::shared_ptr<const DictionarySet> initial)
    : current_(std::move(initial)) {}

std::shared_ptr<const DictionarySet> DictionaryStore::Snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  return current_;
}

void DictionaryStore::Install(std::shared_ptr<const DictionarySet> next) {
  std::lock_guard<std::mutex> lock(mu_);
  current_ = std::move(next);
}

}  // namespace vntn

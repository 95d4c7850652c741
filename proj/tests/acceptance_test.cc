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

// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "reference_verbalizer.h"
#include "test_util.h"
#include "vntn/normalizer.h"
#include "vntn/numverb.h"
#include "vntn/trace.h"
#include "vntn/unicode.h"

namespace vntn {
namespace {

using Clock = std::chrono::steady_clock;
using testing::TempFile;

// Pinned limits.
constexpr double kGoldenSeconds = 1.0;
constexpr double kOracleSeconds = 5.0;
constexpr double kPropertySeconds = 10.0;
constexpr double kScalingSeconds = 30.0;
constexpr double kReloadSeconds = 10.0;
constexpr double kMinUtterancesPerMinute = 20'000.0;
constexpr double kMaxScalingRatio = 1.5;
constexpr int kRandomOracleSamples = 1000;
constexpr std::size_t kCorpusLines = 1000;
constexpr int kTokensPerUtterance = 15;

struct Verdict {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void CheckTime(Verdict* v, Clock::time_point start, double limit) {
  const double s = Seconds(start);
  std::ostringstream note;
  note << s << " s";
  if (s >= limit) {
    v->Fail("took " + note.str() + ", limit " + std::to_string(limit) + " s");
  } else if (v->pass) {
    v->detail = note.str() + (v->detail.empty() ? "" : ", " + v->detail);
  }
}

Verdict GoldenExamples() {
  const auto start = Clock::now();
  Verdict v;
  struct Golden {
    const char* input;
    bool preprocess;
    const char* folded;
  };
  const Golden goldens[] = {
      {"Toi co 123 quyen sach", true, "Toi co mot tram hai muoi ba quyen sach"},
      {"Hom nay la 25/12/2023", true,
       "hom nay la ngay hai muoi lam thang muoi hai nam hai nghin khong tram "
       "hai muoi ba"},
      {"Gia la 1.500.000 dong", true, "Gia la mot trieu nam tram nghin dong"},
      {"Gia container la 1.500.000 dong tu Singapore", true,
       "Gia cong-te-no la mot trieu nam tram nghin dong tu xin-ga-po"},
      {"123 NASA", false, "123 na-sa"},
      {"9:30", true, "chin gio ba muoi phut"},
      {"14:30", true, "muoi bon gio ba muoi phut"},
  };
  const Normalizer normalizer;
  int passed = 0;
  for (const Golden& g : goldens) {
    const std::string got = normalizer.NormalizeText(g.input, g.preprocess);
    if (unicode::FoldDiacritics(got) != unicode::FoldDiacritics(g.folded)) {
      v.Fail(std::string("\"") + g.input + "\" -> \"" + got + "\"");
    } else {
      ++passed;
    }
  }
  v.detail = std::to_string(passed) + "/" + std::to_string(std::size(goldens)) +
             " pairs";
  CheckTime(&v, start, kGoldenSeconds);
  return v;
}

Verdict NumberOracle() {
  const auto start = Clock::now();
  Verdict v;
  auto check = [&v](std::uint64_t n) {
    if (VerbalizeInteger(n) != testing::ReferenceVerbalize(n)) {
      v.Fail("mismatch at " + std::to_string(n));
    }
  };
  for (std::uint64_t n = 0; n <= 9999; ++n) check(n);
  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<std::uint64_t> dist(10'000, kMaxVerbalizable);
  for (int i = 0; i < kRandomOracleSamples; ++i) check(dist(rng));
  v.detail = "10000 exhaustive + " + std::to_string(kRandomOracleSamples) +
             " random";
  CheckTime(&v, start, kOracleSeconds);
  return v;
}

Verdict PropertySuite() {
  const auto start = Clock::now();
  Verdict v;
  const auto corpus = testing::ReadLines(testing::DataPath("mixed_corpus.txt"));
  if (corpus.size() != kCorpusLines) {
    v.Fail("fixture has " + std::to_string(corpus.size()) + " lines");
    return v;
  }
  const Normalizer normalizer;
  const Normalizer second;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string& line = corpus[i];
    const std::string where = "line " + std::to_string(i + 1);
    const NormalizationResult result = normalizer.Normalize(line);
    if (normalizer.NormalizeText(result.text) != result.text) {
      v.Fail(where + ": not idempotent");
    }
    if (testing::ContainsAsciiDigit(result.text)) {
      v.Fail(where + ": digit residue in \"" + result.text + "\"");
    }
    try {
      if (ReplayTrace(line, result.trace) != result.text) {
        v.Fail(where + ": trace replay differs");
      }
    } catch (const std::exception& e) {
      v.Fail(where + ": trace replay failed: " + e.what());
    }
    const NormalizationResult again = second.Normalize(line);
    if (again.text != result.text || again.trace != result.trace) {
      v.Fail(where + ": nondeterministic");
    }
  }
  const std::string date = normalizer.NormalizeText("2/9");
  if (date != "ngày hai tháng chín") v.Fail("\"2/9\" -> \"" + date + "\"");
  v.detail = std::to_string(corpus.size()) + " lines";
  CheckTime(&v, start, kPropertySeconds);
  return v;
}

std::string Utterance(std::mt19937_64& rng) {
  static const std::vector<std::string> kTokens = {
      "Tôi", "có", "123", "quyển", "sách", "25/12/2023", "9:30", "giá",
      "1.500.000đ", "50%", "NASA", "container", "Singapore", "GDP", "tăng",
      "3,5%", "ngày", "mai", "$20", "đi", "chợ", "14:30", "và", "người"};
  std::uniform_int_distribution<std::size_t> pick(0, kTokens.size() - 1);
  std::string out;
  for (int i = 0; i < kTokensPerUtterance; ++i) {
    if (i) out += ' ';
    out += kTokens[pick(rng)];
  }
  return out;
}

Verdict Throughput() {
  Verdict v;
  std::mt19937_64 rng(42);
  std::string input;
  for (int i = 0; i < 500; ++i) input += Utterance(rng) + "\n";
  const TempFile file(input, ".txt");
  const std::string command = std::string(VNTN_CLI_PATH) + " --bench 40 -i " +
                              file.path().string() + " 2>&1";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) {
    v.Fail("cannot run " + command);
    return v;
  }
  std::string out;
  char buf[512];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = ::pclose(pipe);
  const std::string key = "utterances/minute: ";
  const auto at = out.find(key);
  if (status != 0 || at == std::string::npos) {
    v.Fail("bench run failed: " + out);
    return v;
  }
  const double rate = std::stod(out.substr(at + key.size()));
  std::ostringstream note;
  note << static_cast<std::uint64_t>(rate) << " utterances/minute (floor "
       << static_cast<std::uint64_t>(kMinUtterancesPerMinute) << ")";
  v.detail = note.str();
  if (rate < kMinUtterancesPerMinute) v.Fail(note.str());
  return v;
}

std::string SyntheticKey(std::size_t i) {
  std::string key = "zq";
  for (std::size_t n = i + 1; n; n /= 26) key += static_cast<char>('a' + n % 26);
  return key;
}

std::string SyntheticCsv(std::size_t entries) {
  std::string csv = "word,replacement\n";
  for (std::size_t i = 0; i < entries; ++i) {
    csv += SyntheticKey(i) + ",mục " + SyntheticKey(i).substr(2) + "\n";
  }
  return csv;
}

double MinSecondsPerUtterance(const Normalizer& normalizer,
                              const std::string& input) {
  constexpr int kTrials = 15;
  constexpr int kRepetitions = 200;
  double best = 1e9;
  volatile std::size_t sink = 0;
  for (int t = 0; t < kTrials; ++t) {
    const auto start = Clock::now();
    for (int r = 0; r < kRepetitions; ++r) {
      sink = sink + normalizer.NormalizeText(input, false).size();
    }
    best = std::min(best, Seconds(start) / kRepetitions);
  }
  return best;
}

Verdict DictionaryScaling() {
  const auto start = Clock::now();
  Verdict v;
  // ~1 kB of text hitting keys present in both dictionaries.
  std::string input;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> key(0, 99);
  const std::vector<std::string> words = {"người", "dân", "thành", "phố",
                                          "đi", "chợ", "mua", "rau"};
  while (input.size() < 1024) {
    input += (rng() % 3 == 0 ? SyntheticKey(key(rng)) : words[rng() % words.size()]);
    input += ' ';
  }
  const TempFile small(SyntheticCsv(100));
  const TempFile large(SyntheticCsv(1000));
  const TempFile no_acronyms("word,replacement\n");
  NormalizerConfig config;
  config.acronyms_path = no_acronyms.path();
  config.loanwords_path = small.path();
  const Normalizer n100(config);
  config.loanwords_path = large.path();
  const Normalizer n1000(config);
  if (n100.NormalizeText(input, false) != n1000.NormalizeText(input, false)) {
    v.Fail("outputs differ between dictionary sizes");
    return v;
  }
  const double t100 = MinSecondsPerUtterance(n100, input);
  const double t1000 = MinSecondsPerUtterance(n1000, input);
  const double ratio = t1000 / t100;
  std::ostringstream note;
  note << "ratio " << ratio << " (limit " << kMaxScalingRatio << "), "
       << t100 * 1e6 << " us vs " << t1000 * 1e6 << " us per "
       << input.size() << " B";
  v.detail = note.str();
  if (ratio > kMaxScalingRatio) v.Fail(note.str());
  CheckTime(&v, start, kScalingSeconds);
  return v;
}

Verdict ReloadAtomicity() {
  const auto start = Clock::now();
  Verdict v;
  constexpr int kKeys = 40;
  auto csv = [](const std::string& value) {
    std::string out = "word,replacement\n";
    for (int i = 0; i < kKeys; ++i) out += SyntheticKey(i) + "," + value + "\n";
    return out;
  };
  const std::string old_csv = csv("cũ");
  const std::string new_csv = csv("mới");
  std::string input;
  for (int i = 0; i < kKeys; ++i) input += SyntheticKey(i) + " ";
  input.pop_back();
  auto uniform = [](const std::string& word) {
    std::string out;
    for (int i = 0; i < kKeys; ++i) out += (i ? " " : "") + word;
    return out;
  };
  const std::string all_old = uniform("cũ");
  const std::string all_new = uniform("mới");

  const TempFile acronyms(old_csv);
  const TempFile old_file(old_csv);
  const TempFile new_file(new_csv);
  NormalizerConfig config;
  config.acronyms_path = acronyms.path();
  Normalizer normalizer(config);

  std::atomic<bool> stop{false};
  std::atomic<long> calls{0}, olds{0}, news{0}, mixed{0};
  std::vector<std::thread> readers;
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&] {
      while (!stop.load()) {
        const std::string out = normalizer.NormalizeText(input);
        ++calls;
        if (out == all_old) ++olds;
        else if (out == all_new) ++news;
        else ++mixed;
      }
    });
  }
  int reloads = 0;
  const auto deadline = Clock::now() + std::chrono::seconds(2);
  while (Clock::now() < deadline) {
    normalizer.ReloadDictionaries(reloads % 2 ? old_file.path()
                                              : new_file.path());
    ++reloads;
  }
  stop = true;
  for (auto& t : readers) t.join();

  std::ostringstream note;
  note << calls << " calls, " << reloads << " reloads, " << olds << " old, "
       << news << " new, " << mixed << " mixed";
  v.detail = note.str();
  if (mixed != 0) v.Fail(note.str());
  if (olds == 0 || news == 0) v.Fail("did not observe both versions: " + note.str());
  CheckTime(&v, start, kReloadSeconds);
  return v;
}

}  // namespace
}  // namespace vntn

int main() {
  struct Criterion {
    const char* name;
    std::function<vntn::Verdict()> run;
  };
  const Criterion criteria[] = {
      {"golden-parity", vntn::GoldenExamples},
      {"number-oracle", vntn::NumberOracle},
      {"property-suite", vntn::PropertySuite},
      {"throughput", vntn::Throughput},
      {"dictionary-scaling", vntn::DictionaryScaling},
      {"reload-atomicity", vntn::ReloadAtomicity},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    vntn::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.Fail(std::string("exception: ") + e.what());
    }
    std::cout << (v.pass ? "PASS " : "FAIL ") << c.name << " (" << v.detail
              << ")" << std::endl;
    if (!v.pass) ++failures;
  }
  return failures;
}

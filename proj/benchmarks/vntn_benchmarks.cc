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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "vntn/dictionary.h"
#include "vntn/normalizer.h"
#include "vntn/numverb.h"

namespace vntn {
namespace {

void BM_VerbalizeInteger(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> dist(0, kMaxVerbalizable);
  std::vector<std::uint64_t> values(1024);
  for (auto& v : values) v = dist(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(VerbalizeInteger(values[i++ & 1023]));
  }
}
BENCHMARK(BM_VerbalizeInteger);

void BM_Normalize(benchmark::State& state) {
  const Normalizer normalizer;
  const std::string text =
      "Gia container la 1.500.000 dong tu Singapore, cuoc hop luc 9:30 ngay "
      "15/08/1990 va GDP tang 3,5%";
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalizer.NormalizeText(text));
  }
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_Normalize);

void BM_NormalizeWithTrace(benchmark::State& state) {
  const Normalizer normalizer;
  const std::string text = "Toi co 123 quyen sach, NASA va 25/12/2023 ngay 2/9";
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalizer.Normalize(text));
  }
}
BENCHMARK(BM_NormalizeWithTrace);

std::string Key(std::int64_t i) {
  std::string key = "zq";
  for (std::int64_t n = i + 1; n; n /= 26) key += static_cast<char>('a' + n % 26);
  return key;
}

void BM_DictionaryApply(benchmark::State& state) {
  std::vector<DictionaryEntry> entries;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    entries.push_back({Key(i), "mục"});
  }
  const auto dict = CompiledDictionary::Compile(entries, MatchCase::kInsensitive);
  std::string text;
  std::mt19937_64 rng(3);
  while (text.size() < 1024) {
    text += (rng() % 3 == 0 ? Key(static_cast<std::int64_t>(rng() % 100))
                            : std::string("người dân"));
    text += ' ';
  }
  for (auto _ : state) benchmark::DoNotOptimize(dict.Apply(text));
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_DictionaryApply)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace
}  // namespace vntn

BENCHMARK_MAIN();

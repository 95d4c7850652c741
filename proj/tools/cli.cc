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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vntn/error.h"
#include "vntn/normalizer.h"

namespace vntn::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kBatchLines = 1024;

struct Options {
  std::string input;
  std::string output;
  bool jsonl = false;
  bool trace = false;
  bool no_preprocess = false;
  std::string acronyms;
  std::string loanwords;
  int bench = 0;
  int threads = 1;
};

Json TraceToJson(const std::vector<TraceRecord>& trace) {
  Json records = Json::array();
  for (const TraceRecord& r : trace) {
    records.push_back(Json{{"pass", PassName(r.pass)},
                           {"start", r.start},
                           {"end", r.end},
                           {"original", r.original},
                           {"replacement", r.replacement}});
  }
  return records;
}

std::string Dump(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

// Turns one input line into one output line. Errors are reported on `err`
// and as an error record, so the output keeps one line per input line.
class LineProcessor {
 public:
  LineProcessor(const Normalizer& normalizer, const Options& options)
      : normalizer_(normalizer), options_(options) {}

  std::string Process(const std::string& line, std::size_t line_number,
                      std::string* diagnostics) const {
    if (!options_.jsonl) {
      if (!options_.trace) {
        return normalizer_.NormalizeText(line, !options_.no_preprocess);
      }
      NormalizationResult result =
          normalizer_.Normalize(line, !options_.no_preprocess);
      for (const TraceRecord& r : result.trace) {
        *diagnostics += "trace\t" + std::to_string(line_number) + "\t" +
                        std::string(PassName(r.pass)) + "\t" +
                        std::to_string(r.start) + "\t" +
                        std::to_string(r.end) + "\t" + r.original + "\t" +
                        r.replacement + "\n";
      }
      return std::move(result.text);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) return "";
    const auto fail = [&](const std::string& why) {
      *diagnostics += "line " + std::to_string(line_number) + ": " + why + "\n";
      return Dump(Json{{"line", line_number}, {"error", why}});
    };
    Json request = Json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (request.is_discarded()) return fail("malformed JSON");
    if (!request.is_object()) return fail("expected a JSON object");
    auto text = request.find("text");
    if (text == request.end() || !text->is_string()) {
      return fail("missing string field \"text\"");
    }
    const std::string input = text->get<std::string>();
    NormalizationResult result =
        normalizer_.Normalize(input, !options_.no_preprocess);
    Json response;
    if (auto id = request.find("id"); id != request.end()) response["id"] = *id;
    response["text"] = input;
    response["normalized"] = result.text;
    if (options_.trace) response["trace"] = TraceToJson(result.trace);
    return Dump(response);
  }

 private:
  const Normalizer& normalizer_;
  const Options& options_;
};

int RunBench(const Normalizer& normalizer, const Options& options,
             std::istream& in, std::ostream& out) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  if (in.bad()) return kExitIoError;
  std::size_t sink = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < options.bench; ++i) {
    for (const std::string& line : lines) {
      sink += normalizer.NormalizeText(line, !options.no_preprocess).size();
    }
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  const double utterances =
      static_cast<double>(lines.size()) * static_cast<double>(options.bench);
  const double seconds = std::max(elapsed.count(), 1e-9);
  out << "utterances: " << static_cast<std::size_t>(utterances) << "\n"
      << "seconds: " << seconds << "\n"
      << "output_bytes: " << sink << "\n"
      << "utterances/minute: " << static_cast<std::size_t>(utterances * 60.0 / seconds)
      << "\n";
  return out ? kExitOk : kExitIoError;
}

int RunBatch(const Normalizer& normalizer, const Options& options,
             std::istream& in, std::ostream& out, std::ostream& err) {
  const LineProcessor processor(normalizer, options);
  std::size_t line_number = 0;
  if (options.threads <= 1) {
    std::string diagnostics;
    for (std::string line; std::getline(in, line);) {
      out << processor.Process(line, ++line_number, &diagnostics) << '\n';
      if (!diagnostics.empty()) {
        err << diagnostics;
        diagnostics.clear();
      }
      if (!out) return kExitIoError;
    }
    return in.bad() ? kExitIoError : kExitOk;
  }

  // Batches are processed in parallel and written in input order.
  const std::size_t workers = static_cast<std::size_t>(options.threads);
  std::vector<std::string> lines;
  std::vector<std::string> results;
  std::vector<std::string> diagnostics;
  while (true) {
    lines.clear();
    for (std::string line;
         lines.size() < kBatchLines && std::getline(in, line);) {
      lines.push_back(std::move(line));
    }
    if (lines.empty()) break;
    results.assign(lines.size(), {});
    diagnostics.assign(lines.size(), {});
    const std::size_t first_line = line_number + 1;
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < lines.size(); i += workers) {
          results[i] = processor.Process(lines[i], first_line + i, &diagnostics[i]);
        }
      });
    }
    pool.clear();  // joins
    for (std::size_t i = 0; i < lines.size(); ++i) {
      out << results[i] << '\n';
      err << diagnostics[i];
    }
    line_number += lines.size();
    if (!out) return kExitIoError;
  }
  return in.bad() ? kExitIoError : kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options options;
  CLI::App app{"Vietnamese text normalization for TTS and NLP corpora.",
               args.empty() ? "vntn" : args[0]};
  app.add_option("-i,--input", options.input,
                 "Read from FILE instead of stdin");
  app.add_option("-o,--output", options.output,
                 "Write to FILE instead of stdout");
  app.add_flag("--jsonl", options.jsonl,
               "JSON lines: {\"id\",\"text\"} in, "
               "{\"id\",\"text\",\"normalized\"} out");
  app.add_flag("--trace", options.trace,
               "Include trace records (JSONL field, or stderr in plain mode)");
  app.add_flag("--no-preprocess", options.no_preprocess,
               "Dictionary-only mode: skip the date/time/currency/percent/"
               "number passes");
  app.add_option("--acronyms", options.acronyms, "Acronym dictionary CSV");
  app.add_option("--loanwords", options.loanwords, "Loanword dictionary CSV");
  app.add_option("--bench", options.bench,
                 "Normalize the input N times and report utterances/minute")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", options.threads,
                 "Worker threads (output order is preserved)")
      ->check(CLI::Range(1, 256));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitConfigError;
  }

  NormalizerConfig config;
  const char* dict_dir = std::getenv("VNTN_DICT_DIR");
  if (dict_dir != nullptr && *dict_dir != '\0') {
    config.acronyms_path = std::filesystem::path(dict_dir) / "acronyms.csv";
    config.loanwords_path =
        std::filesystem::path(dict_dir) / "non_vietnamese_words.csv";
  }
  if (!options.acronyms.empty()) config.acronyms_path = options.acronyms;
  if (!options.loanwords.empty()) config.loanwords_path = options.loanwords;

  std::optional<Normalizer> normalizer;
  try {
    normalizer.emplace(std::move(config));
  } catch (const Error& e) {
    err << "vntn: " << e.what() << "\n";
    return kExitConfigError;
  }
  for (const std::string& warning : normalizer->dictionaries()->warnings) {
    err << "vntn: warning: " << warning << "\n";
  }

  std::ifstream input_file;
  if (!options.input.empty()) {
    input_file.open(options.input, std::ios::binary);
    if (!input_file) {
      err << "vntn: cannot open input " << options.input << "\n";
      return kExitIoError;
    }
  }
  std::ofstream output_file;
  if (!options.output.empty()) {
    output_file.open(options.output, std::ios::binary | std::ios::trunc);
    if (!output_file) {
      err << "vntn: cannot open output " << options.output << "\n";
      return kExitIoError;
    }
  }
  std::istream& source = options.input.empty() ? in : input_file;
  std::ostream& sink = options.output.empty() ? out : output_file;

  int status = options.bench > 0
                   ? RunBench(*normalizer, options, source, sink)
                   : RunBatch(*normalizer, options, source, sink, err);
  sink.flush();
  if (status == kExitOk && !sink) status = kExitIoError;
  if (status == kExitIoError) err << "vntn: I/O error\n";
  return status;
}

}  // namespace vntn::cli

/*
Copyright 2026 The Wordpack Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordpack/dictionary.hpp"
#include "wordpack/second_stage.hpp"
#include "wordpack/tokenizer.hpp"

namespace wordpack {

// Cost of a token stream before and after reduction, in bits. General
// form is 8 bits per source byte; reduced form counts 19-bit codes plus
// escape bodies, with stream framing excluded. An empty stream reports
// the 19-bit framing floor instead.
struct BitCost {
  std::uint64_t general_bits = 0;
  std::uint64_t reduced_bits = 0;
  std::uint64_t token_count = 0;  // 19-bit codes, END_OF_STREAM excluded
  std::uint64_t word_count = 0;
  std::uint64_t punct_count = 0;
};

// Predicts encode()'s output size without materializing the bit stream.
BitCost estimate(std::span<const Token> tokens, const Dictionary& dict);

// (general - reduced) / general, as a percentage. Empty when general is 0.
std::optional<double> reduction_percent(const BitCost& cost);

// Byte-level reduction summary at 19 bits per coded token.
struct ReductionReport {
  std::uint64_t word_count = 0;
  std::uint64_t punct_count = 0;
  std::uint64_t token_count = 0;  // words + punctuation
  std::uint64_t general_bytes = 0;
  std::uint64_t reduced_bytes = 0;
  std::int64_t saved_bytes = 0;
  std::optional<double> percent;
};

// The report for a text of `general_bytes` holding `words` word tokens
// and `puncts` punctuation tokens: every token costs 19 bits and the
// total is rounded up to whole bytes.
ReductionReport report_table4(std::uint64_t words, std::uint64_t puncts,
                              std::uint64_t general_bytes);

std::string render_report(const ReductionReport& report);

// Percent formatted with two decimals, halves rounding away from zero.
std::string format_percent(double percent);

struct BenchEntry {
  std::string path;
  bool ok = false;
  std::string error;
  std::uint64_t general_bytes = 0;
  std::uint64_t reduced_bytes = 0;   // payload bytes before the second stage
  std::uint64_t deflated_bytes = 0;  // payload bytes after the second stage
  std::optional<double> percent;     // reduction before the second stage
};

struct BenchResult {
  std::vector<BenchEntry> entries;
  std::optional<double> average_percent;  // mean over files that compressed
};

// Compresses each file against `dict` and collects per-file reductions.
// Unreadable or failing files produce error entries; the run continues.
BenchResult corpus_bench(std::span<const std::filesystem::path> files,
                         const Dictionary& dict, bool second_stage,
                         const SecondStage& stage = raw_deflate_stage());

}  // namespace wordpack

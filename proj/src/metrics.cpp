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

#include "wordpack/metrics.hpp"

#include <cmath>
#include <cstdio>

#include "wordpack/alphabet.hpp"
#include "wordpack/container.hpp"
#include "wordpack/file_io.hpp"

namespace wordpack {

namespace {

constexpr std::uint64_t kRawChunkMax = 0xFFFFFFFFull;

// Byte length detokenize() would produce, without building the string.
std::uint64_t detokenized_length(std::span<const Token> tokens) {
  std::uint64_t length = 0;
  bool pending_space = false;
  for (const Token& t : tokens) {
    switch (t.kind) {
      case Token::Kind::kWord:
        length += (pending_space ? 1 : 0) + t.text.size();
        pending_space = true;
        break;
      case Token::Kind::kPunct:
        length += t.no_space_after ? 1 : 2;
        pending_space = false;
        break;
      case Token::Kind::kExtraSpace:
        length += 1;
        break;
      case Token::Kind::kNewline:
        length += 1;
        pending_space = false;
        break;
      case Token::Kind::kNoSpace:
        pending_space = false;
        break;
      case Token::Kind::kRaw:
        length += t.text.size();
        pending_space = false;
        break;
    }
  }
  return length;
}

std::uint64_t raw_escape_bits(std::uint64_t bytes, std::uint64_t& codes) {
  const std::uint64_t chunks =
      bytes == 0 ? 1 : (bytes + kRawChunkMax - 1) / kRawChunkMax;
  codes = chunks;
  return chunks * (19 + 32) + 8 * bytes;
}

bool run_class(CaseClass cls) {
  return cls == CaseClass::kUpper || cls == CaseClass::kToggle;
}

bool neutral_kind(Token::Kind kind) {
  return kind == Token::Kind::kPunct || kind == Token::Kind::kExtraSpace ||
         kind == Token::Kind::kNewline || kind == Token::Kind::kNoSpace;
}

}  // namespace

BitCost estimate(std::span<const Token> tokens, const Dictionary& dict) {
  BitCost cost;
  cost.general_bits = 8 * detokenized_length(tokens);
  if (tokens.empty()) {
    // A bare END_OF_STREAM is all an empty stream costs.
    cost.reduced_bits = 19;
    return cost;
  }

  std::uint64_t bits = 0;
  SpacingState spacing;

  const auto add_word_unit = [&](std::string_view lower, bool force_literal) {
    if (!force_literal &&
        dict.lookup_code(lower, /*trailing_space=*/true).has_value()) {
      bits += 19;
    } else {
      bits += 19 + 6 * (static_cast<std::uint64_t>(lower.size()) + 1);
    }
    ++cost.token_count;
    ++cost.word_count;
  };

  const auto add_plain = [&](const Token& t) {
    switch (t.kind) {
      case Token::Kind::kPunct:
        bits += 19;
        ++cost.token_count;
        ++cost.punct_count;
        break;
      case Token::Kind::kExtraSpace:
      case Token::Kind::kNewline:
      case Token::Kind::kNoSpace:
        bits += 19;
        ++cost.token_count;
        break;
      case Token::Kind::kRaw: {
        std::uint64_t codes = 0;
        bits += raw_escape_bits(t.text.size(), codes);
        cost.token_count += codes;
        break;
      }
      case Token::Kind::kWord:
        break;
    }
    spacing.advance(t);
  };

  const std::size_t n = tokens.size();
  std::size_t i = 0;
  while (i < n) {
    const Token& t = tokens[i];
    if (t.kind != Token::Kind::kWord) {
      add_plain(t);
      ++i;
      continue;
    }
    if (t.case_class == CaseClass::kOther) {
      std::uint64_t codes = 0;
      bits += raw_escape_bits(t.text.size(), codes);
      cost.token_count += codes;
      ++cost.word_count;
      spacing.advance(t);
      ++i;
      continue;
    }
    if (run_class(t.case_class)) {
      std::size_t last = i;
      std::size_t words = 1;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (tokens[j].kind == Token::Kind::kWord) {
          if (tokens[j].case_class != t.case_class) break;
          last = j;
          ++words;
        } else if (!neutral_kind(tokens[j].kind)) {
          break;
        }
      }
      if (words >= 2) {
        bits += 2 * 19;  // begin and end markers
        cost.token_count += 2;
        for (std::size_t k = i; k <= last; ++k) {
          const Token& u = tokens[k];
          if (u.kind == Token::Kind::kWord) {
            add_word_unit(to_lower_ascii(u.text), /*force_literal=*/false);
            spacing.advance(u);
          } else {
            add_plain(u);
          }
        }
        i = last + 1;
        continue;
      }
    }
    // A word on its own: a case marker when the decoder's defaults do not
    // already regenerate the casing, then the code or literal.
    const std::string lower = to_lower_ascii(t.text);
    const bool expects = spacing.expects_sentence_case;
    const bool force_literal =
        t.case_class == CaseClass::kLower && (expects || lower == "i");
    const bool in_dict =
        dict.lookup_code(lower, /*trailing_space=*/true).has_value();
    const bool literal = force_literal || !in_dict;
    bool marker = false;
    switch (t.case_class) {
      case CaseClass::kSentence:
      case CaseClass::kTitle:
        marker = !expects || literal;
        break;
      case CaseClass::kUpper:
        if (lower.size() == 1 && (expects || lower == "i")) {
          marker = literal;
        } else {
          marker = true;
        }
        break;
      case CaseClass::kToggle:
        marker = true;
        break;
      default:
        break;
    }
    if (marker) {
      bits += 19;
      ++cost.token_count;
    }
    add_word_unit(lower, force_literal);
    spacing.advance(t);
    ++i;
  }
  cost.reduced_bits = bits;
  return cost;
}

std::optional<double> reduction_percent(const BitCost& cost) {
  if (cost.general_bits == 0) return std::nullopt;
  const double general = static_cast<double>(cost.general_bits);
  const double reduced = static_cast<double>(cost.reduced_bits);
  return (general - reduced) / general * 100.0;
}

ReductionReport report_table4(std::uint64_t words, std::uint64_t puncts,
                              std::uint64_t general_bytes) {
  ReductionReport report;
  report.word_count = words;
  report.punct_count = puncts;
  report.token_count = words + puncts;
  report.general_bytes = general_bytes;
  report.reduced_bytes = (report.token_count * 19 + 7) / 8;
  report.saved_bytes = static_cast<std::int64_t>(general_bytes) -
                       static_cast<std::int64_t>(report.reduced_bytes);
  if (general_bytes > 0) {
    report.percent = static_cast<double>(report.saved_bytes) /
                     static_cast<double>(general_bytes) * 100.0;
  }
  return report;
}

std::string format_percent(double percent) {
  const long long scaled = std::llround(percent * 100.0);
  const bool negative = scaled < 0;
  const unsigned long long magnitude = negative
                                           ? static_cast<unsigned long long>(-scaled)
                                           : static_cast<unsigned long long>(scaled);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%llu.%02llu", negative ? "-" : "",
                magnitude / 100, magnitude % 100);
  return buf;
}

std::string render_report(const ReductionReport& report) {
  std::string percent =
      report.percent ? format_percent(*report.percent) + "%" : "N/A";
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "words                  %12llu\n"
                "punctuation            %12llu\n"
                "words with punctuation %12llu\n"
                "general bytes          %12llu\n"
                "reduced bytes          %12llu\n"
                "saved bytes            %12lld\n"
                "reduction              %12s\n",
                static_cast<unsigned long long>(report.word_count),
                static_cast<unsigned long long>(report.punct_count),
                static_cast<unsigned long long>(report.token_count),
                static_cast<unsigned long long>(report.general_bytes),
                static_cast<unsigned long long>(report.reduced_bytes),
                static_cast<long long>(report.saved_bytes), percent.c_str());
  return buf;
}

BenchResult corpus_bench(std::span<const std::filesystem::path> files,
                         const Dictionary& dict, bool second_stage,
                         const SecondStage& stage) {
  BenchResult result;
  double percent_sum = 0.0;
  std::size_t percent_count = 0;
  for (const std::filesystem::path& file : files) {
    BenchEntry entry;
    entry.path = file.string();
    try {
      const std::vector<std::uint8_t> data = read_binary_file(file);
      const std::string text(data.begin(), data.end());
      Payload payload;
      const std::vector<std::uint8_t> container =
          compress(text, dict, {.second_stage = second_stage}, stage, &payload);
      entry.general_bytes = data.size();
      entry.reduced_bytes = payload.bits.bytes().size();
      entry.deflated_bytes = container.size() - kContainerHeaderSize;
      if (entry.general_bytes > 0) {
        entry.percent = (static_cast<double>(entry.general_bytes) -
                         static_cast<double>(entry.reduced_bytes)) /
                        static_cast<double>(entry.general_bytes) * 100.0;
        percent_sum += *entry.percent;
        ++percent_count;
      }
      entry.ok = true;
    } catch (const Error& e) {
      entry.error = e.what();
    }
    result.entries.push_back(std::move(entry));
  }
  if (percent_count > 0) {
    result.average_percent = percent_sum / static_cast<double>(percent_count);
  }
  return result;
}

}  // namespace wordpack

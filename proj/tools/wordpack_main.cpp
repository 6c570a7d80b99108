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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wordpack/alphabet.hpp"
#include "wordpack/container.hpp"
#include "wordpack/dictionary.hpp"
#include "wordpack/file_io.hpp"
#include "wordpack/metrics.hpp"

namespace {

namespace fs = std::filesystem;
using namespace wordpack;

// Exit codes, also listed in the README. Diagnostics go to stderr.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kIo = 3,
  kFormat = 4,
  kWrongDictionary = 5,
  kCorruption = 6,
  kTruncation = 7,
  kInvalidWord = 8,
};

Dictionary load_dictionary_file(const fs::path& path) {
  return Dictionary::load_compiled(read_binary_file(path));
}

int cmd_dict_build(const fs::path& wordlist_path, const fs::path& out_path) {
  const std::string text = read_text_file(wordlist_path);
  if (parse_wordlist(text).empty()) {
    std::cerr << "warning: wordlist " << wordlist_path.string()
              << " has no entries; the dictionary only covers punctuation\n";
  }
  const Dictionary dict = Dictionary::build_from_wordlist_text(text);
  write_binary_file(out_path, dict.serialize_compiled());
  std::printf("entries:             %zu\n", dict.size());
  std::printf("words:               %zu\n", dict.word_count());
  std::printf("digest:              %016llx\n",
              static_cast<unsigned long long>(dict.digest()));
  std::printf("average word length: %.2f\n", dict.average_word_length());
  std::printf("table memory:        %llu bits\n",
              static_cast<unsigned long long>(table_memory_bits(
                  dict.size(), dict.average_word_length())));
  return kOk;
}

int cmd_compress(const fs::path& in_path, const fs::path& dict_path,
                 const fs::path& out_path, bool second_stage) {
  const Dictionary dict = load_dictionary_file(dict_path);
  const std::string text = read_text_file(in_path);
  Payload payload;
  const std::vector<std::uint8_t> container =
      compress(text, dict, {.second_stage = second_stage},
               raw_deflate_stage(), &payload);
  write_binary_file(out_path, container);

  ReductionReport report;
  report.word_count = payload.word_count;
  report.punct_count = payload.punct_count;
  report.token_count = payload.word_count + payload.punct_count;
  report.general_bytes = text.size();
  report.reduced_bytes = payload.bits.bytes().size();
  report.saved_bytes = static_cast<std::int64_t>(report.general_bytes) -
                       static_cast<std::int64_t>(report.reduced_bytes);
  if (report.general_bytes > 0) {
    report.percent = static_cast<double>(report.saved_bytes) /
                     static_cast<double>(report.general_bytes) * 100.0;
  }
  std::fputs(render_report(report).c_str(), stdout);
  std::printf("container bytes        %12zu\n", container.size());
  return kOk;
}

int cmd_decompress(const fs::path& in_path, const fs::path& dict_path,
                   const fs::path& out_path) {
  const Dictionary dict = load_dictionary_file(dict_path);
  const std::vector<std::uint8_t> container = read_binary_file(in_path);
  const std::string text = decompress(container, dict);
  write_binary_file(out_path,
                    {reinterpret_cast<const std::uint8_t*>(text.data()),
                     text.size()});
  std::fprintf(stderr, "%zu bytes restored\n", text.size());
  return kOk;
}

int cmd_stats(const fs::path& dict_path) {
  const Dictionary dict = load_dictionary_file(dict_path);
  std::printf("entries:             %zu\n", dict.size());
  std::printf("words:               %zu\n", dict.word_count());
  std::printf("punctuation entries: %u\n", kPunctEntryCount);
  std::printf("digest:              %016llx\n",
              static_cast<unsigned long long>(dict.digest()));
  std::printf("average word length: %.2f\n", dict.average_word_length());
  std::printf("bucket histogram:\n");
  const auto sizes = dict.bucket_sizes();
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    if (sizes[b] == 0) continue;
    if (b < 26) {
      std::printf("  %c:     %8u\n", static_cast<char>('a' + b), sizes[b]);
    } else {
      std::printf("  other: %8u\n", sizes[b]);
    }
  }
  const std::uint64_t bits = table_memory_bits(dict.size(),
                                               dict.average_word_length());
  std::printf("table memory:        %llu bits (%.4f MB)\n",
              static_cast<unsigned long long>(bits),
              static_cast<double>(bits) / 8.0 / (1024.0 * 1024.0));
  // Projection at the full 19-bit code space, reserved band included, to
  // size a worst-case table up front.
  const double avg = dict.word_count() > 0 ? dict.average_word_length() : 7.0;
  const std::uint64_t full_bits = table_memory_bits(kCodeLimit, avg);
  std::printf("at full capacity:    %llu entries, %llu bits (%.4f MB)\n",
              static_cast<unsigned long long>(kCodeLimit),
              static_cast<unsigned long long>(full_bits),
              static_cast<double>(full_bits) / 8.0 / (1024.0 * 1024.0));
  return kOk;
}

int cmd_bench(const fs::path& dir, const fs::path& dict_path,
              const std::string& format) {
  const Dictionary dict = load_dictionary_file(dict_path);
  std::vector<fs::path> files;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; it != end && !ec;
       it.increment(ec)) {
    if (it->is_regular_file()) files.push_back(it->path());
  }
  if (ec) {
    throw IoError("cannot list " + dir.string() + ": " + ec.message());
  }
  std::sort(files.begin(), files.end());
  const BenchResult result = corpus_bench(files, dict, /*second_stage=*/true);

  if (format == "records") {
    for (const BenchEntry& e : result.entries) {
      if (!e.ok) {
        std::fprintf(stderr, "error\t%s\t%s\n", e.path.c_str(),
                     e.error.c_str());
        continue;
      }
      std::printf("%s\t%llu\t%llu\t%llu\t%s\n", e.path.c_str(),
                  static_cast<unsigned long long>(e.general_bytes),
                  static_cast<unsigned long long>(e.reduced_bytes),
                  static_cast<unsigned long long>(e.deflated_bytes),
                  e.percent ? format_percent(*e.percent).c_str() : "N/A");
    }
    if (result.average_percent) {
      std::printf("# average\t%s\n",
                  format_percent(*result.average_percent).c_str());
    }
    return kOk;
  }

  std::printf("%-32s %10s %10s %10s %10s\n", "file", "general", "reduced",
              "deflated", "percent");
  for (const BenchEntry& e : result.entries) {
    const std::string name = fs::path(e.path).filename().string();
    if (!e.ok) {
      std::printf("%-32s error: %s\n", name.c_str(), e.error.c_str());
      continue;
    }
    std::printf("%-32s %10llu %10llu %10llu %9s%%\n", name.c_str(),
                static_cast<unsigned long long>(e.general_bytes),
                static_cast<unsigned long long>(e.reduced_bytes),
                static_cast<unsigned long long>(e.deflated_bytes),
                e.percent ? format_percent(*e.percent).c_str() : "N/A");
  }
  if (result.average_percent) {
    std::printf("average reduction: %s%%\n",
                format_percent(*result.average_percent).c_str());
  }
  return kOk;
}

int dispatch_error(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  if (dynamic_cast<const IoError*>(&e)) return kIo;
  if (dynamic_cast<const WrongDictionaryError*>(&e)) return kWrongDictionary;
  if (dynamic_cast<const TruncationError*>(&e)) return kTruncation;
  if (dynamic_cast<const CorruptionError*>(&e)) return kCorruption;
  if (dynamic_cast<const InvalidWordError*>(&e)) return kInvalidWord;
  if (dynamic_cast<const FormatError*>(&e)) return kFormat;
  return kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wordpack: dictionary-coded text compression"};
  app.require_subcommand(1);

  std::string wordlist_arg, input_arg, output_arg, dict_arg, dir_arg;
  std::string format_arg = "table";
  bool no_deflate = false;

  CLI::App* dict_cmd = app.add_subcommand("dict", "dictionary operations");
  dict_cmd->require_subcommand(1);
  CLI::App* build_cmd =
      dict_cmd->add_subcommand("build", "compile a wordlist");
  build_cmd->add_option("wordlist", wordlist_arg, "one word per line")
      ->required();
  build_cmd->add_option("-o,--output", output_arg, "compiled dictionary path")
      ->required();

  CLI::App* compress_cmd = app.add_subcommand("compress", "compress a file");
  compress_cmd->add_option("input", input_arg, "text file")->required();
  compress_cmd->add_option("-d,--dictionary", dict_arg, "compiled dictionary")
      ->required();
  compress_cmd->add_option("-o,--output", output_arg, "container path")
      ->required();
  compress_cmd->add_flag("--no-deflate", no_deflate,
                         "skip the second-stage deflate");

  CLI::App* decompress_cmd =
      app.add_subcommand("decompress", "restore a file");
  decompress_cmd->add_option("input", input_arg, "container file")->required();
  decompress_cmd
      ->add_option("-d,--dictionary", dict_arg, "compiled dictionary")
      ->required();
  decompress_cmd->add_option("-o,--output", output_arg, "restored text path")
      ->required();

  CLI::App* stats_cmd =
      app.add_subcommand("stats", "describe a compiled dictionary");
  stats_cmd->add_option("dictionary", dict_arg, "compiled dictionary")
      ->required();

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "compress every file in a directory");
  bench_cmd->add_option("directory", dir_arg, "corpus directory")->required();
  bench_cmd->add_option("-d,--dictionary", dict_arg, "compiled dictionary")
      ->required();
  bench_cmd->add_option("--format", format_arg, "table or records")
      ->check(CLI::IsMember({"table", "records"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (build_cmd->parsed()) {
      return cmd_dict_build(wordlist_arg, output_arg);
    }
    if (compress_cmd->parsed()) {
      return cmd_compress(input_arg, dict_arg, output_arg, !no_deflate);
    }
    if (decompress_cmd->parsed()) {
      return cmd_decompress(input_arg, dict_arg, output_arg);
    }
    if (stats_cmd->parsed()) {
      return cmd_stats(dict_arg);
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(dir_arg, dict_arg, format_arg);
    }
  } catch (const Error& e) {
    return dispatch_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

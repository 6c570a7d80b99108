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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordpack/errors.hpp"

namespace wordpack {

// Every token in a reduced stream is a 19-bit code. The top 256 values
// form a reserved band for control tokens; everything below is assignable
// to dictionary entries.
inline constexpr unsigned kCodeBits = 19;
inline constexpr std::uint32_t kCodeLimit = 1u << kCodeBits;      // 524288
inline constexpr std::uint32_t kReservedBase = kCodeLimit - 256;  // 0x7FF00
inline constexpr std::uint32_t kMaxEntries = kReservedBase;
inline constexpr std::size_t kMaxWordLength = 64;

// Control tokens, assigned consecutively from kReservedBase.
enum class Reserved : std::uint32_t {
  kLiteralBegin = kReservedBase,  // spelled-out word follows
  kRawBegin,                      // length-prefixed raw bytes follow
  kCaseUpperSingle,               // next word is all uppercase
  kCaseUpperBegin,                // following words are all uppercase
  kCaseUpperEnd,
  kCaseTitleSingle,  // next word is capitalized
  kCaseToggleSingle, // next word is lowercase head, uppercase tail
  kCaseToggleBegin,
  kCaseToggleEnd,
  kSpaceExplicit,  // a space beyond the implicit inter-word one
  kNewline,
  kNoSpace,  // suppresses the pending implicit space
  kEndOfStream,
};

inline constexpr std::uint32_t kReservedCount = 13;

constexpr std::uint32_t reserved_code(Reserved token) {
  return static_cast<std::uint32_t>(token);
}

// Maps a code in the reserved band to its token. Codes in the band but
// past the defined tokens yield empty.
std::optional<Reserved> reserved_from_code(std::uint32_t code);

const char* reserved_name(Reserved token);

// Punctuation symbols occupy codes 0..53, two codes per symbol; word
// codes start right after.
inline constexpr std::uint32_t kPunctEntryCount = 54;
inline constexpr std::uint32_t kFirstWordCode = kPunctEntryCount;

struct DictEntry {
  std::uint32_t code = 0;
  std::string surface;         // punctuation symbol or lowercase word
  bool trailing_space = true;  // false only for the no-space punctuation twin

  bool is_punctuation() const { return code < kPunctEntryCount; }
};

// Lookup result for a code: a dictionary entry, a reserved token, or
// nothing (unassigned).
struct CodeLookup {
  const DictEntry* entry = nullptr;
  std::optional<Reserved> reserved;

  bool assigned() const { return entry != nullptr || reserved.has_value(); }
};

// One wordlist line that survived comment and blank stripping.
struct WordlistLine {
  std::string text;
  std::size_t line = 0;  // 1-based position in the original file
};

// Strips blank lines and '#' comments, keeping original line numbers.
std::vector<WordlistLine> parse_wordlist(std::string_view text);

// Immutable code table. Codes 0..53 always hold the punctuation symbols,
// each as a (with-space, no-space) pair; words follow in first-seen order
// starting at code 54. Queries are safe to run concurrently once built.
class Dictionary {
 public:
  // Builds from raw words. Words are lowercased, validated and deduped;
  // `lines` supplies 1-based line numbers for error reporting (0 when
  // unknown). Throws InvalidWordError or CapacityError.
  static Dictionary build(std::span<const std::string> words,
                          std::span<const std::size_t> lines = {});

  // Convenience: parse_wordlist + build.
  static Dictionary build_from_wordlist_text(std::string_view text);

  // Compiled binary form (see serialize for the layout).
  static Dictionary load_compiled(std::span<const std::uint8_t> bytes);
  std::vector<std::uint8_t> serialize_compiled() const;

  std::size_t size() const { return entries_.size(); }
  std::size_t word_count() const { return entries_.size() - kPunctEntryCount; }
  std::uint64_t digest() const { return digest_; }
  std::span<const DictEntry> entries() const { return entries_; }

  // Surface lookup: words by lowercase surface with trailing_space true,
  // punctuation by symbol and desired spacing. Empty when absent.
  std::optional<std::uint32_t> lookup_code(std::string_view surface,
                                           bool trailing_space) const;

  // Code lookup across entries and the reserved band.
  CodeLookup lookup_surface(std::uint32_t code) const;
  const DictEntry* entry_for(std::uint32_t code) const;

  // Mean surface length of word entries; 0 when no words.
  double average_word_length() const;

  // Entry counts per first-letter bucket: 26 letter buckets plus a final
  // bucket for punctuation entries.
  std::array<std::uint32_t, 27> bucket_sizes() const;

 private:
  Dictionary() = default;
  void index_buckets();
  void add_punctuation_entries();

  std::vector<DictEntry> entries_;
  // Word indices sorted by (first letter, surface); punctuation lives in
  // its own bucket sorted by (symbol, trailing_space first).
  std::vector<std::uint32_t> sorted_;
  std::array<std::pair<std::uint32_t, std::uint32_t>, 27> buckets_{};
  std::uint64_t digest_ = 0;
};

// Size in bits of a table of `entry_count` records whose words average
// `avg_word_chars` characters: 19-bit code, one 6-bit code per character,
// a 6-bit terminator per record. The average is rounded to the nearest
// whole character first.
std::uint64_t table_memory_bits(std::uint64_t entry_count,
                                double avg_word_chars);

// FNV-1a 64-bit digest over the canonical entry listing.
std::uint64_t entry_list_digest(std::span<const DictEntry> entries);

}  // namespace wordpack

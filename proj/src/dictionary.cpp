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

#include "wordpack/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <tuple>
#include <unordered_set>

#include "wordpack/alphabet.hpp"
#include "wordpack/bitstream.hpp"

namespace wordpack {

namespace {

constexpr char kDictMagic[4] = {'W', 'P', 'K', 'D'};
constexpr std::uint8_t kDictVersion = 1;
constexpr std::size_t kDictHeaderSize = 4 + 1 + 4 + 8;

std::size_t bucket_of(const DictEntry& e) {
  const char c = e.surface[0];
  return (c >= 'a' && c <= 'z') ? static_cast<std::size_t>(c - 'a') : 26u;
}

int spacing_rank(bool trailing_space) { return trailing_space ? 0 : 1; }

void put_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_u64_be(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

std::uint32_t get_u32_be(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) |
         (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) | p[3];
}

std::uint64_t get_u64_be(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
  return v;
}

std::string validated_word(std::string_view raw, std::size_t line) {
  std::string word = to_lower_ascii(raw);
  if (word.empty()) {
    throw InvalidWordError("empty wordlist entry", line);
  }
  if (word.size() > kMaxWordLength) {
    throw InvalidWordError("wordlist entry longer than " +
                               std::to_string(kMaxWordLength) +
                               " characters: \"" + word.substr(0, 16) + "...\"",
                           line);
  }
  for (char c : word) {
    if ((c >= 'a' && c <= 'z') || c == '\'' || c == '-') continue;
    throw InvalidWordError(
        "wordlist entry \"" + word + "\" contains unsupported character '" +
            std::string(1, c) + "'",
        line);
  }
  if (!is_valid_word_surface(word)) {
    throw InvalidWordError("wordlist entry \"" + word +
                               "\" must start with a letter and every ' or - "
                               "must be followed by a letter",
                           line);
  }
  return word;
}

}  // namespace

std::optional<Reserved> reserved_from_code(std::uint32_t code) {
  if (code < kReservedBase || code >= kReservedBase + kReservedCount) {
    return std::nullopt;
  }
  return static_cast<Reserved>(code);
}

const char* reserved_name(Reserved token) {
  switch (token) {
    case Reserved::kLiteralBegin: return "LITERAL_BEGIN";
    case Reserved::kRawBegin: return "RAW_BEGIN";
    case Reserved::kCaseUpperSingle: return "CASE_UPPER_SINGLE";
    case Reserved::kCaseUpperBegin: return "CASE_UPPER_BEGIN";
    case Reserved::kCaseUpperEnd: return "CASE_UPPER_END";
    case Reserved::kCaseTitleSingle: return "CASE_TITLE_SINGLE";
    case Reserved::kCaseToggleSingle: return "CASE_TOGGLE_SINGLE";
    case Reserved::kCaseToggleBegin: return "CASE_TOGGLE_BEGIN";
    case Reserved::kCaseToggleEnd: return "CASE_TOGGLE_END";
    case Reserved::kSpaceExplicit: return "SPACE_EXPLICIT";
    case Reserved::kNewline: return "NEWLINE";
    case Reserved::kNoSpace: return "NO_SPACE";
    case Reserved::kEndOfStream: return "END_OF_STREAM";
  }
  return "UNKNOWN";
}

std::vector<WordlistLine> parse_wordlist(std::string_view text) {
  std::vector<WordlistLine> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    ++line_no;
    while (!line.empty() &&
           (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (!line.empty() && line.front() != '#') {
      out.push_back({std::string(line), line_no});
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

void Dictionary::add_punctuation_entries() {
  for (std::size_t i = 0; i < kPunctuation.size(); ++i) {
    const std::string symbol(1, kPunctuation[i]);
    entries_.push_back(
        {static_cast<std::uint32_t>(2 * i), symbol, /*trailing_space=*/true});
    entries_.push_back({static_cast<std::uint32_t>(2 * i + 1), symbol,
                        /*trailing_space=*/false});
  }
}

Dictionary Dictionary::build(std::span<const std::string> words,
                             std::span<const std::size_t> lines) {
  Dictionary dict;
  dict.entries_.reserve(kPunctEntryCount + words.size());
  dict.add_punctuation_entries();
  std::unordered_set<std::string> seen;
  seen.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t line = i < lines.size() ? lines[i] : 0;
    std::string word = validated_word(words[i], line);
    if (!seen.insert(word).second) continue;
    if (dict.entries_.size() >= kMaxEntries) {
      throw CapacityError("dictionary full: " + std::to_string(kMaxEntries) +
                          " codes assigned, cannot add \"" + word + "\"");
    }
    dict.entries_.push_back({static_cast<std::uint32_t>(dict.entries_.size()),
                             std::move(word), /*trailing_space=*/true});
  }
  dict.digest_ = entry_list_digest(dict.entries_);
  dict.index_buckets();
  return dict;
}

Dictionary Dictionary::build_from_wordlist_text(std::string_view text) {
  const std::vector<WordlistLine> parsed = parse_wordlist(text);
  std::vector<std::string> words;
  std::vector<std::size_t> lines;
  words.reserve(parsed.size());
  lines.reserve(parsed.size());
  for (const WordlistLine& entry : parsed) {
    words.push_back(entry.text);
    lines.push_back(entry.line);
  }
  return build(words, lines);
}

void Dictionary::index_buckets() {
  sorted_.resize(entries_.size());
  for (std::uint32_t i = 0; i < entries_.size(); ++i) sorted_[i] = i;
  std::sort(sorted_.begin(), sorted_.end(),
            [this](std::uint32_t a, std::uint32_t b) {
              const DictEntry& ea = entries_[a];
              const DictEntry& eb = entries_[b];
              return std::make_tuple(bucket_of(ea), std::string_view(ea.surface),
                                     spacing_rank(ea.trailing_space)) <
                     std::make_tuple(bucket_of(eb), std::string_view(eb.surface),
                                     spacing_rank(eb.trailing_space));
            });
  std::size_t pos = 0;
  for (std::size_t b = 0; b < buckets_.size(); ++b) {
    const std::size_t begin = pos;
    while (pos < sorted_.size() && bucket_of(entries_[sorted_[pos]]) == b) {
      ++pos;
    }
    buckets_[b] = {static_cast<std::uint32_t>(begin),
                   static_cast<std::uint32_t>(pos - begin)};
  }
}

std::optional<std::uint32_t> Dictionary::lookup_code(std::string_view surface,
                                                     bool trailing_space) const {
  if (surface.empty()) return std::nullopt;
  const char c = surface[0];
  const std::size_t bucket =
      (c >= 'a' && c <= 'z') ? static_cast<std::size_t>(c - 'a') : 26u;
  const auto [offset, count] = buckets_[bucket];
  const auto begin = sorted_.begin() + offset;
  const auto end = begin + count;
  const auto key = std::make_tuple(surface, spacing_rank(trailing_space));
  const auto it = std::lower_bound(
      begin, end, key, [this](std::uint32_t idx, const auto& k) {
        const DictEntry& e = entries_[idx];
        return std::make_tuple(std::string_view(e.surface),
                               spacing_rank(e.trailing_space)) < k;
      });
  if (it == end) return std::nullopt;
  const DictEntry& e = entries_[*it];
  if (e.surface != surface || e.trailing_space != trailing_space) {
    return std::nullopt;
  }
  return e.code;
}

const DictEntry* Dictionary::entry_for(std::uint32_t code) const {
  if (code >= entries_.size()) return nullptr;
  return &entries_[code];
}

CodeLookup Dictionary::lookup_surface(std::uint32_t code) const {
  CodeLookup result;
  result.entry = entry_for(code);
  if (result.entry == nullptr) result.reserved = reserved_from_code(code);
  return result;
}

double Dictionary::average_word_length() const {
  if (word_count() == 0) return 0.0;
  std::uint64_t total = 0;
  for (std::size_t i = kFirstWordCode; i < entries_.size(); ++i) {
    total += entries_[i].surface.size();
  }
  return static_cast<double>(total) / static_cast<double>(word_count());
}

std::array<std::uint32_t, 27> Dictionary::bucket_sizes() const {
  std::array<std::uint32_t, 27> sizes{};
  for (std::size_t b = 0; b < buckets_.size(); ++b) {
    sizes[b] = buckets_[b].second;
  }
  return sizes;
}

std::vector<std::uint8_t> Dictionary::serialize_compiled() const {
  std::vector<std::uint8_t> out;
  out.insert(out.end(), kDictMagic, kDictMagic + 4);
  out.push_back(kDictVersion);
  put_u32_be(out, static_cast<std::uint32_t>(entries_.size()));
  put_u64_be(out, digest_);
  BitBuffer bits;
  for (const DictEntry& e : entries_) {
    bits.write_bits(e.code, kCodeBits);
    for (char c : e.surface) {
      bits.write_bits(*char_code(c), kCharCodeBits);
    }
    bits.write_bits(kCharCodeTerminator, kCharCodeBits);
    bits.write_bits(e.trailing_space ? 1u : 0u, 1);
  }
  bits.pad_to_byte();
  const auto body = bits.bytes();
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

Dictionary Dictionary::load_compiled(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 ||
      std::memcmp(bytes.data(), kDictMagic, 4) != 0) {
    if (bytes.size() >= 4) {
      throw FormatError("not a compiled dictionary: bad magic");
    }
    throw TruncationError("compiled dictionary shorter than its header");
  }
  if (bytes.size() < kDictHeaderSize) {
    throw TruncationError("compiled dictionary shorter than its header");
  }
  const std::uint8_t version = bytes[4];
  if (version != kDictVersion) {
    throw FormatError("unsupported dictionary version " +
                      std::to_string(version));
  }
  const std::uint32_t count = get_u32_be(bytes.data() + 5);
  if (count < kPunctEntryCount || count > kMaxEntries) {
    throw FormatError("dictionary entry count " + std::to_string(count) +
                      " outside valid range");
  }
  const std::uint64_t stored_digest = get_u64_be(bytes.data() + 9);

  std::vector<std::uint8_t> body(bytes.begin() + kDictHeaderSize, bytes.end());
  const std::uint64_t body_bits = std::uint64_t{8} * body.size();
  const BitBuffer buf = BitBuffer::from_bytes(std::move(body), body_bits);
  BitReader reader(buf);

  Dictionary dict;
  dict.entries_.reserve(count);
  std::unordered_set<std::string_view> seen;
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint32_t code = reader.read_bits(kCodeBits);
    if (code != i) {
      throw FormatError("dictionary record " + std::to_string(i) +
                        " carries code " + std::to_string(code));
    }
    std::string surface;
    for (;;) {
      const std::uint32_t c = reader.read_bits(kCharCodeBits);
      if (c == kCharCodeTerminator) break;
      if (surface.size() >= kMaxWordLength) {
        throw FormatError("dictionary record " + std::to_string(i) +
                          " longer than " + std::to_string(kMaxWordLength) +
                          " characters");
      }
      surface.push_back(char_for_code(static_cast<std::uint8_t>(c)));
    }
    if (surface.empty()) {
      throw FormatError("dictionary record " + std::to_string(i) +
                        " has an empty surface");
    }
    const bool trailing = reader.read_bits(1) != 0;
    dict.entries_.push_back({code, std::move(surface), trailing});
  }
  if (reader.remaining() >= 8) {
    throw FormatError("trailing data after the last dictionary record");
  }
  if (!reader.at_end() &&
      reader.read_bits(static_cast<unsigned>(reader.remaining())) != 0) {
    throw CorruptionError("nonzero padding after the last dictionary record");
  }

  // Digest first: any bit damage that kept the record framing intact is
  // reported as corruption, not as a layout problem.
  dict.digest_ = entry_list_digest(dict.entries_);
  if (dict.digest_ != stored_digest) {
    throw CorruptionError("dictionary digest mismatch: stored " +
                          std::to_string(stored_digest) + ", computed " +
                          std::to_string(dict.digest_));
  }

  for (std::uint32_t i = 0; i < kPunctEntryCount; ++i) {
    const DictEntry& e = dict.entries_[i];
    const std::string expected(1, kPunctuation[i / 2]);
    const bool expected_trailing = (i % 2) == 0;
    if (e.surface != expected || e.trailing_space != expected_trailing) {
      throw FormatError("punctuation record " + std::to_string(i) +
                        " does not match the fixed layout");
    }
  }
  for (std::size_t i = kFirstWordCode; i < dict.entries_.size(); ++i) {
    const DictEntry& e = dict.entries_[i];
    if (!is_valid_word_surface(e.surface)) {
      throw FormatError("dictionary word record " + std::to_string(i) +
                        " has an invalid surface");
    }
    if (!e.trailing_space) {
      throw FormatError("dictionary word record " + std::to_string(i) +
                        " must carry a trailing space");
    }
    if (!seen.insert(e.surface).second) {
      throw FormatError("duplicate dictionary word \"" + e.surface + "\"");
    }
  }

  dict.index_buckets();
  return dict;
}

std::uint64_t table_memory_bits(std::uint64_t entry_count,
                                double avg_word_chars) {
  const std::uint64_t chars =
      avg_word_chars <= 0.0
          ? 0
          : static_cast<std::uint64_t>(std::llround(avg_word_chars));
  return entry_count * (kCodeBits + kCharCodeBits * chars + kCharCodeBits);
}

std::uint64_t entry_list_digest(std::span<const DictEntry> entries) {
  std::uint64_t h = 14695981039346656037ULL;
  const auto mix = [&h](unsigned char byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (const DictEntry& e : entries) {
    for (char c : e.surface) mix(static_cast<unsigned char>(c));
    mix('\t');
    mix(e.trailing_space ? '1' : '0');
    mix('\n');
  }
  return h;
}

}  // namespace wordpack

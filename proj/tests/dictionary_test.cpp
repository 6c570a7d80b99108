#include "wordpack/dictionary.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "wordpack/alphabet.hpp"

namespace wordpack {
namespace {

std::vector<std::string> words(std::initializer_list<const char*> list) {
  return {list.begin(), list.end()};
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

// Serialized punctuation-only dictionary, computed with an independent
// bit-packing script and frozen here.
constexpr const char* kPunctOnlyHex =
    "57504b4401000000366d0bd4043b6b5b2400001281000032800000530100007300"
    "000093810000b3800000d4010000f40000011481000134800001550100017500000"
    "195810001b5800001d6010001f6000002168100023680000257010002770000029781"
    "0002b7800002d8010002f80000031881000338800003590100037900000399810003b9"
    "800003da010003fa0000041a8100043a8000045b0100047b0000049b810004bb800004"
    "dc010004fc0000051c8100053c8000055d0100057d0000059d810005bd800005de0100"
    "05fe0000061e8100063e8000065f0100067f0000069f810006bf80";

TEST(Dictionary, PunctuationAlwaysPresent) {
  const Dictionary dict = Dictionary::build({});
  EXPECT_EQ(dict.size(), 54u);
  EXPECT_EQ(dict.word_count(), 0u);
  // Each symbol has a with-space and a no-space code, in symbol order.
  EXPECT_EQ(dict.lookup_code(".", true), 0u);
  EXPECT_EQ(dict.lookup_code(".", false), 1u);
  EXPECT_EQ(dict.lookup_code(",", true), 2u);
  EXPECT_EQ(dict.lookup_code(",", false), 3u);
  EXPECT_EQ(dict.lookup_code("~", true), 52u);
  EXPECT_EQ(dict.lookup_code("~", false), 53u);
  const DictEntry* first = dict.entry_for(0);
  ASSERT_NE(first, nullptr);
  EXPECT_TRUE(first->is_punctuation());
  EXPECT_EQ(first->surface, ".");
  EXPECT_TRUE(first->trailing_space);
}

TEST(Dictionary, WordsFollowInFirstSeenOrder) {
  const auto dict = Dictionary::build(words({"hello", "world"}));
  EXPECT_EQ(dict.size(), 56u);
  EXPECT_EQ(dict.word_count(), 2u);
  EXPECT_EQ(dict.lookup_code("hello", true), 54u);
  EXPECT_EQ(dict.lookup_code("world", true), 55u);
  // Words never carry a no-space variant.
  EXPECT_EQ(dict.lookup_code("hello", false), std::nullopt);
  EXPECT_EQ(dict.lookup_code("absent", true), std::nullopt);
}

TEST(Dictionary, BuildLowercasesAndDeduplicates) {
  const auto dict = Dictionary::build(words({"Dog", "dog", "DOG", "cat"}));
  EXPECT_EQ(dict.word_count(), 2u);
  EXPECT_EQ(dict.lookup_code("dog", true), 54u);
  EXPECT_EQ(dict.lookup_code("cat", true), 55u);
}

TEST(Dictionary, AcceptsEmbeddedApostropheAndHyphen) {
  const auto dict = Dictionary::build(words({"don't", "well-known"}));
  EXPECT_EQ(dict.lookup_code("don't", true), 54u);
  EXPECT_EQ(dict.lookup_code("well-known", true), 55u);
}

TEST(Dictionary, RejectsInvalidWordsWithLineNumbers) {
  const char* text = "alpha\n\n# comment line\ncaf\xC3\xA9\n";
  try {
    Dictionary::build_from_wordlist_text(text);
    FAIL() << "expected InvalidWordError";
  } catch (const InvalidWordError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("unsupported character"),
              std::string::npos);
  }

  EXPECT_THROW(Dictionary::build(words({"abc1"})), InvalidWordError);
  EXPECT_THROW(Dictionary::build(words({"-dash"})), InvalidWordError);
  EXPECT_THROW(Dictionary::build(words({"trailing-"})), InvalidWordError);
  EXPECT_THROW(Dictionary::build(words({"two--dashes"})), InvalidWordError);
  EXPECT_THROW(Dictionary::build(words({"'quote"})), InvalidWordError);
  const std::vector<std::string> overlong = {std::string(65, 'a')};
  EXPECT_THROW(Dictionary::build(overlong), InvalidWordError);
  const std::vector<std::string> longest = {std::string(64, 'a')};
  EXPECT_NO_THROW(Dictionary::build(longest));
}

TEST(Dictionary, WordlistParsingSkipsBlanksAndComments) {
  const auto lines = parse_wordlist("one\r\n  \n# note\n  two  \n#\nthree");
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].text, "one");
  EXPECT_EQ(lines[0].line, 1u);
  EXPECT_EQ(lines[1].text, "two");
  EXPECT_EQ(lines[1].line, 4u);
  EXPECT_EQ(lines[2].text, "three");
  EXPECT_EQ(lines[2].line, 6u);
}

TEST(Dictionary, CapacityCapsAssignableCodes) {
  // 523978 words fill every assignable code; one more must not fit.
  const std::size_t capacity = kMaxEntries - kPunctEntryCount;
  std::vector<std::string> many;
  many.reserve(capacity + 1);
  for (std::size_t i = 0; i < capacity + 1; ++i) {
    std::string w(5, 'a');
    std::size_t v = i;
    for (int k = 0; k < 5; ++k) {
      w[k] = static_cast<char>('a' + v % 26);
      v /= 26;
    }
    many.push_back(std::move(w));
  }
  EXPECT_THROW(Dictionary::build(many), CapacityError);
  many.pop_back();
  const Dictionary dict = Dictionary::build(many);
  EXPECT_EQ(dict.size(), kMaxEntries);
  EXPECT_EQ(dict.entries().back().code, kMaxEntries - 1);
}

TEST(Dictionary, ReservedBandLookups) {
  const Dictionary dict = Dictionary::build({});
  EXPECT_EQ(dict.lookup_surface(kReservedBase).reserved,
            Reserved::kLiteralBegin);
  EXPECT_EQ(dict.lookup_surface(0x7FF01u).reserved, Reserved::kRawBegin);
  EXPECT_EQ(dict.lookup_surface(0x7FF0Cu).reserved, Reserved::kEndOfStream);
  EXPECT_EQ(reserved_code(Reserved::kEndOfStream), 0x7FF0Cu);
  // Band codes past the defined tokens stay unassigned.
  EXPECT_FALSE(dict.lookup_surface(0x7FF0Du).assigned());
  EXPECT_FALSE(dict.lookup_surface(0x7FFFFu).assigned());
  // Below the band, unassigned codes yield nothing.
  EXPECT_FALSE(dict.lookup_surface(54).assigned());
  EXPECT_EQ(reserved_from_code(100), std::nullopt);
}

TEST(Dictionary, SerializeMatchesFrozenOracleBytes) {
  const Dictionary dict = Dictionary::build({});
  EXPECT_EQ(to_hex(dict.serialize_compiled()), kPunctOnlyHex);
  EXPECT_EQ(dict.digest(), 0x6d0bd4043b6b5b24ull);
  EXPECT_EQ(Dictionary::build(words({"hello", "world"})).digest(),
            0xf38dbe0a7544aa80ull);
}

TEST(Dictionary, RecordSizesFollowTheFormula) {
  // Base: 54 punctuation records of 32 bits each plus the 17-byte header.
  EXPECT_EQ(Dictionary::build({}).serialize_compiled().size(), 233u);
  // A 1-character word adds 19 + 6 + 6 + 1 = 32 bits.
  EXPECT_EQ(Dictionary::build(words({"a"})).serialize_compiled().size(), 237u);
  // A 7-character word adds 19 + 42 + 6 + 1 = 68 bits.
  EXPECT_EQ(
      Dictionary::build(words({"a", "restart"})).serialize_compiled().size(),
      246u);
}

TEST(Dictionary, CompiledRoundTripPreservesEverything) {
  const auto dict =
      Dictionary::build(words({"hello", "world", "don't", "a", "zebra"}));
  const auto blob = dict.serialize_compiled();
  const Dictionary loaded = Dictionary::load_compiled(blob);
  ASSERT_EQ(loaded.size(), dict.size());
  EXPECT_EQ(loaded.digest(), dict.digest());
  for (std::size_t i = 0; i < dict.size(); ++i) {
    EXPECT_EQ(loaded.entries()[i].code, dict.entries()[i].code);
    EXPECT_EQ(loaded.entries()[i].surface, dict.entries()[i].surface);
    EXPECT_EQ(loaded.entries()[i].trailing_space,
              dict.entries()[i].trailing_space);
  }
  EXPECT_EQ(loaded.lookup_code("don't", true), dict.lookup_code("don't", true));
}

TEST(Dictionary, LoadRejectsDamage) {
  const auto blob = Dictionary::build(words({"aaaa"})).serialize_compiled();

  {
    auto bad = blob;
    bad[0] = 'X';
    EXPECT_THROW(Dictionary::load_compiled(bad), FormatError);
  }
  {
    auto bad = blob;
    bad[4] = 2;  // version
    EXPECT_THROW(Dictionary::load_compiled(bad), FormatError);
  }
  {
    auto bad = blob;
    bad.resize(bad.size() - 5);
    EXPECT_THROW(Dictionary::load_compiled(bad), TruncationError);
  }
  {
    std::vector<std::uint8_t> tiny = {'W', 'P'};
    EXPECT_THROW(Dictionary::load_compiled(tiny), TruncationError);
  }
  {
    // Flipping this bit rewrites the word "aaaa" to the equally
    // well-formed "caaa", so only the digest can notice.
    auto bad = blob;
    ASSERT_GT(bad.size(), 235u);
    bad[235] ^= 0x01;
    EXPECT_THROW(Dictionary::load_compiled(bad), CorruptionError);
  }
}

TEST(Dictionary, BucketedLookupMatchesLinearScan) {
  std::mt19937_64 rng(0x5eed0002);
  for (int round = 0; round < 50; ++round) {
    std::vector<std::string> vocab;
    const int count = 1 + static_cast<int>(rng() % 120);
    for (int k = 0; k < count; ++k) {
      std::string w;
      const int len = 1 + static_cast<int>(rng() % 9);
      for (int j = 0; j < len; ++j) {
        w.push_back(static_cast<char>('a' + rng() % 26));
      }
      vocab.push_back(std::move(w));
    }
    const Dictionary dict = Dictionary::build(vocab);

    const auto linear = [&dict](std::string_view surface, bool ts)
        -> std::optional<std::uint32_t> {
      for (const DictEntry& e : dict.entries()) {
        if (e.surface == surface && e.trailing_space == ts) return e.code;
      }
      return std::nullopt;
    };

    for (const DictEntry& e : dict.entries()) {
      ASSERT_EQ(dict.lookup_code(e.surface, e.trailing_space), e.code);
    }
    for (int probe = 0; probe < 200; ++probe) {
      std::string w;
      const int len = 1 + static_cast<int>(rng() % 10);
      for (int j = 0; j < len; ++j) {
        w.push_back(static_cast<char>('a' + rng() % 26));
      }
      const bool ts = rng() % 2 == 0;
      ASSERT_EQ(dict.lookup_code(w, ts), linear(w, ts)) << w;
    }
  }
}

TEST(Dictionary, CodeAndSurfaceLookupsAreABijection) {
  const auto dict = Dictionary::build(words({"one", "two", "three"}));
  for (const DictEntry& e : dict.entries()) {
    const auto code = dict.lookup_code(e.surface, e.trailing_space);
    ASSERT_EQ(code, e.code);
    const CodeLookup back = dict.lookup_surface(e.code);
    ASSERT_NE(back.entry, nullptr);
    EXPECT_EQ(back.entry->surface, e.surface);
    EXPECT_EQ(back.entry->trailing_space, e.trailing_space);
  }
}

TEST(Dictionary, TableMemoryFormula) {
  // 2^19 entries at 7 characters per word: 2^19 * (19 + 42 + 6) bits.
  EXPECT_EQ(table_memory_bits(1u << 19, 7.0), 35127296u);
  EXPECT_EQ(table_memory_bits(1u << 19, 7.0) / 8, 4390912u);  // bytes
  // 4390912 / 2^20 = 4.1875 MB exactly.
  EXPECT_DOUBLE_EQ(static_cast<double>(table_memory_bits(1u << 19, 7.0)) / 8 /
                       (1024.0 * 1024.0),
                   4.1875);
  EXPECT_EQ(table_memory_bits(0, 7.0), 0u);
  // The average rounds to the nearest whole character first.
  EXPECT_EQ(table_memory_bits(10, 6.4), 10u * (19 + 36 + 6));
  EXPECT_EQ(table_memory_bits(10, 6.5), 10u * (19 + 42 + 6));
}

TEST(Dictionary, AverageWordLengthAndBuckets) {
  const auto dict = Dictionary::build(words({"apple", "avocado", "zebra"}));
  EXPECT_DOUBLE_EQ(dict.average_word_length(), (5.0 + 7.0 + 5.0) / 3.0);
  const auto sizes = dict.bucket_sizes();
  EXPECT_EQ(sizes[0], 2u);   // a
  EXPECT_EQ(sizes[25], 1u);  // z
  EXPECT_EQ(sizes[26], 54u); // punctuation
  EXPECT_EQ(Dictionary::build({}).average_word_length(), 0.0);
}

}  // namespace
}  // namespace wordpack

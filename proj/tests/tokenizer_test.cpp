#include "wordpack/tokenizer.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "wordpack/errors.hpp"

namespace wordpack {
namespace {

std::string round_trip(std::string_view text) {
  return detokenize(tokenize(text));
}

TEST(ClassifyCase, CoversEveryShape) {
  EXPECT_EQ(classify_case("boy"), CaseClass::kLower);
  EXPECT_EQ(classify_case("a"), CaseClass::kLower);
  EXPECT_EQ(classify_case("don't"), CaseClass::kLower);
  EXPECT_EQ(classify_case("He"), CaseClass::kSentence);
  EXPECT_EQ(classify_case("Although"), CaseClass::kSentence);
  EXPECT_EQ(classify_case("HE"), CaseClass::kUpper);
  EXPECT_EQ(classify_case("A"), CaseClass::kUpper);
  EXPECT_EQ(classify_case("I"), CaseClass::kUpper);
  EXPECT_EQ(classify_case("NASA"), CaseClass::kUpper);
  EXPECT_EQ(classify_case("aB"), CaseClass::kToggle);
  EXPECT_EQ(classify_case("dOS"), CaseClass::kToggle);
  EXPECT_EQ(classify_case("McDonald"), CaseClass::kOther);
  EXPECT_EQ(classify_case("O'Brien"), CaseClass::kOther);
  EXPECT_EQ(classify_case("hEllo"), CaseClass::kOther);
  // Joiners do not interrupt the letter pattern.
  EXPECT_EQ(classify_case("DON'T"), CaseClass::kUpper);
  EXPECT_EQ(classify_case("Mother-in-law"), CaseClass::kSentence);
  EXPECT_EQ(classify_case("Mother-In-Law"), CaseClass::kOther);
}

TEST(ClassifyCase, RejectsLetterlessInput) {
  EXPECT_THROW(classify_case(""), StructureError);
  EXPECT_THROW(classify_case("'-"), StructureError);
}

TEST(ScanWordEnd, JoinersNeedAFollowingLetter) {
  EXPECT_EQ(scan_word_end("don't,", 0), 5u);
  EXPECT_EQ(scan_word_end("a-b c", 0), 3u);
  EXPECT_EQ(scan_word_end("a- b", 0), 1u);
  EXPECT_EQ(scan_word_end("a'", 0), 1u);
  EXPECT_EQ(scan_word_end("x1", 0), 1u);
  EXPECT_EQ(scan_word_end("rock-'n'-roll", 0), 4u);
}

TEST(IsSingleWord, AcceptsExactlyOneWholeWordToken) {
  EXPECT_TRUE(is_single_word("hello"));
  EXPECT_TRUE(is_single_word("Hello"));
  EXPECT_TRUE(is_single_word("don't"));
  EXPECT_TRUE(is_single_word("O'Brien"));
  EXPECT_FALSE(is_single_word(""));
  EXPECT_FALSE(is_single_word("hello?"));
  EXPECT_FALSE(is_single_word("two words"));
  EXPECT_FALSE(is_single_word("x1"));
  EXPECT_FALSE(is_single_word("trailing-"));
  EXPECT_FALSE(is_single_word(" space"));
}

TEST(Tokenize, SimpleSentenceYieldsWordsAndFinalStop) {
  auto tokens = tokenize("He is a very good boy.");
  ASSERT_EQ(tokens.size(), 7u);
  const char* words[] = {"He", "is", "a", "very", "good", "boy"};
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(tokens[i].kind, Token::Kind::kWord);
    EXPECT_EQ(tokens[i].text, words[i]);
  }
  EXPECT_EQ(tokens[0].case_class, CaseClass::kSentence);
  EXPECT_EQ(tokens[1].case_class, CaseClass::kLower);
  EXPECT_EQ(tokens[6].kind, Token::Kind::kPunct);
  EXPECT_EQ(tokens[6].text, ".");
  EXPECT_TRUE(tokens[6].no_space_after);
}

TEST(Tokenize, PunctuationConsumesOneFollowingSpace) {
  auto tokens = tokenize("a, b");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1], Token::punct(',', false));
  EXPECT_EQ(tokens[1].begin, 1u);
  EXPECT_EQ(tokens[1].end, 3u);
  EXPECT_EQ(tokens[2].begin, 3u);

  // Without a following space the no-space variant appears.
  tokens = tokenize("a,b");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1], Token::punct(',', true));
  EXPECT_EQ(tokens[1].end, 2u);
}

TEST(Tokenize, SpaceBeforePunctuationIsExplicit) {
  auto tokens = tokenize("a ,b");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[1].kind, Token::Kind::kExtraSpace);
  EXPECT_EQ(tokens[2], Token::punct(',', true));
}

TEST(Tokenize, InterWordSpaceIsImplicit) {
  auto tokens = tokenize("good boy");
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0].kind, Token::Kind::kWord);
  EXPECT_EQ(tokens[1].kind, Token::Kind::kWord);
}

TEST(Tokenize, DoubledSpaceKeepsOneExplicitToken) {
  auto tokens = tokenize("a  b");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1].kind, Token::Kind::kExtraSpace);

  tokens = tokenize("a   b");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[1].kind, Token::Kind::kExtraSpace);
  EXPECT_EQ(tokens[2].kind, Token::Kind::kExtraSpace);
}

TEST(Tokenize, NewlineResetsTheImplicitSpace) {
  auto tokens = tokenize("a \n b");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[1].kind, Token::Kind::kExtraSpace);
  EXPECT_EQ(tokens[2].kind, Token::Kind::kNewline);
  EXPECT_EQ(tokens[3].kind, Token::Kind::kExtraSpace);

  tokens = tokenize("a\nb");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1].kind, Token::Kind::kNewline);
}

TEST(Tokenize, LeadingAndTrailingSpacesStayExplicit) {
  auto tokens = tokenize("  a ");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[0].kind, Token::Kind::kExtraSpace);
  EXPECT_EQ(tokens[1].kind, Token::Kind::kExtraSpace);
  EXPECT_EQ(tokens[2].kind, Token::Kind::kWord);
  EXPECT_EQ(tokens[3].kind, Token::Kind::kExtraSpace);
}

TEST(Tokenize, DigitsControlBytesAndNonAsciiTravelRaw) {
  auto tokens = tokenize("x1");
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[1], Token::raw("1"));

  tokens = tokenize("1,2");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0], Token::raw("1"));
  EXPECT_EQ(tokens[1], Token::punct(',', true));
  EXPECT_EQ(tokens[2], Token::raw("2"));

  tokens = tokenize("a\t1b");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1], Token::raw("\t1"));

  tokens = tokenize("h\xc3\xa9llo");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0], Token::word("h"));
  EXPECT_EQ(tokens[1], Token::raw("\xc3\xa9"));
  EXPECT_EQ(tokens[2], Token::word("llo"));
}

TEST(Tokenize, SpaceBetweenWordAndRawIsExplicit) {
  auto tokens = tokenize("a 1");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1].kind, Token::Kind::kExtraSpace);

  tokens = tokenize("1 a");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1].kind, Token::Kind::kExtraSpace);
}

TEST(Tokenize, EmptyInputYieldsNoTokens) {
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_EQ(detokenize({}), "");
}

TEST(Detokenize, CanonicalSequences) {
  EXPECT_EQ(round_trip("a, b"), "a, b");
  EXPECT_EQ(round_trip("a ,b"), "a ,b");
  EXPECT_EQ(round_trip("a  b"), "a  b");
  EXPECT_EQ(round_trip("a \n b"), "a \n b");
  EXPECT_EQ(round_trip("end.  Next"), "end.  Next");
  EXPECT_EQ(round_trip("don't stop"), "don't stop");
  EXPECT_EQ(round_trip("speed - a computer"), "speed - a computer");
  EXPECT_EQ(round_trip("(a [b] {c})"), "(a [b] {c})");
  EXPECT_EQ(round_trip("50% of $3.99!"), "50% of $3.99!");
}

TEST(Detokenize, NoSpaceTokenCancelsTheImplicitSpace) {
  std::vector<Token> tokens = {Token::word("data"), Token::no_space(),
                               Token::word("base")};
  EXPECT_EQ(detokenize(tokens), "database");
}

TEST(Detokenize, RejectsMalformedTokens) {
  // The word factory itself refuses an empty surface.
  EXPECT_THROW(Token::word(""), StructureError);
  std::vector<Token> empty_word = {Token()};
  EXPECT_THROW(detokenize(empty_word), StructureError);

  Token wide = Token::punct('.', true);
  wide.text = "..";
  std::vector<Token> two_symbols = {wide};
  EXPECT_THROW(detokenize(two_symbols), StructureError);

  std::vector<Token> outside_set = {Token::punct('<', true)};
  EXPECT_THROW(detokenize(outside_set), StructureError);
}

TEST(SpacingStateTest, SentencePositionFollowsTerminators) {
  SpacingState state;
  EXPECT_TRUE(state.expects_sentence_case);
  state.advance(Token::word("He"));
  EXPECT_FALSE(state.expects_sentence_case);
  state.advance(Token::punct(',', false));
  EXPECT_FALSE(state.expects_sentence_case);
  state.advance(Token::punct('.', false));
  EXPECT_TRUE(state.expects_sentence_case);
  state.advance(Token::extra_space());
  EXPECT_TRUE(state.expects_sentence_case);
  state.advance(Token::newline());
  EXPECT_TRUE(state.expects_sentence_case);
  state.advance(Token::raw("7"));
  EXPECT_FALSE(state.expects_sentence_case);
  state.advance(Token::punct('!', true));
  EXPECT_TRUE(state.expects_sentence_case);
  state.advance(Token::word("so"));
  state.advance(Token::punct('?', true));
  EXPECT_TRUE(state.expects_sentence_case);
}

std::string random_text(std::mt19937_64& rng) {
  static const std::string_view pieces[] = {
      "the",  "Quick", "BROWN", "fox",   "don't", "O'Brien", "x-ray",
      "I",    "a",     "1984",  "3.14",  "#tag",  "\xc3\xa9", "\t",
      "\r\n", "--",    "...",   "e.g.",  "END",   "iPhone",
  };
  static const std::string_view glue[] = {" ", "  ", "\n", "", ", ", ". "};
  std::uniform_int_distribution<int> count(0, 24);
  std::uniform_int_distribution<std::size_t> piece(0, std::size(pieces) - 1);
  std::uniform_int_distribution<std::size_t> join(0, std::size(glue) - 1);
  std::string text;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    text += pieces[piece(rng)];
    text += glue[join(rng)];
  }
  return text;
}

TEST(Tokenize, RoundTripsArbitraryText) {
  std::mt19937_64 rng(0x5eed0003);
  for (int round = 0; round < 500; ++round) {
    std::string text = random_text(rng);
    EXPECT_EQ(round_trip(text), text) << "round " << round;
  }
  // Pure byte soup, independent of the text generator.
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> byte(1, 255);
  for (int round = 0; round < 500; ++round) {
    std::string text;
    int n = len(rng);
    for (int i = 0; i < n; ++i) text.push_back(static_cast<char>(byte(rng)));
    EXPECT_EQ(round_trip(text), text) << "round " << round;
  }
}

TEST(Tokenize, WordTokensAlwaysStartWithALetter) {
  std::mt19937_64 rng(0x5eed0004);
  for (int round = 0; round < 200; ++round) {
    for (const Token& token : tokenize(random_text(rng))) {
      if (token.kind == Token::Kind::kWord) {
        ASSERT_FALSE(token.text.empty());
        char head = token.text[0];
        EXPECT_TRUE((head >= 'a' && head <= 'z') ||
                    (head >= 'A' && head <= 'Z'));
      } else if (token.kind == Token::Kind::kPunct) {
        ASSERT_EQ(token.text.size(), 1u);
      }
    }
  }
}

}  // namespace
}  // namespace wordpack

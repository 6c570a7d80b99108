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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordpack/errors.hpp"

namespace wordpack {

// Letter-case shape of a word:
//   Lower     every letter lowercase
//   Sentence  first letter uppercase, the rest lowercase
//   Upper     every letter uppercase (single letters included)
//   Title     reserved alias of Sentence; the classifier never returns it
//   Toggle    first letter lowercase, every later letter uppercase
//   Other     anything else; such words travel as raw bytes
enum class CaseClass : std::uint8_t {
  kLower,
  kSentence,
  kUpper,
  kTitle,
  kToggle,
  kOther,
};

CaseClass classify_case(std::string_view word);

// One unit of the reversible text model. A word token keeps its original
// spelling; detokenization owes a single space after each word, which the
// following token may satisfy, replace, or cancel.
struct Token {
  enum class Kind : std::uint8_t {
    kWord,        // letters with embedded ' or -
    kPunct,       // one punctuation symbol; may consume one following space
    kExtraSpace,  // a space beyond the implicit inter-word one
    kNewline,
    kNoSpace,     // cancels the pending implicit space (decode side only)
    kRaw,         // verbatim bytes: digits, control bytes, non-ASCII, etc.
  };

  Kind kind = Kind::kWord;
  std::string text;             // word surface, symbol, or raw bytes
  bool no_space_after = false;  // punctuation only
  CaseClass case_class = CaseClass::kLower;  // words only

  // Source byte span, diagnostics only; not part of equality.
  std::size_t begin = 0;
  std::size_t end = 0;

  static Token word(std::string surface, std::size_t begin = 0,
                    std::size_t end = 0);
  static Token punct(char symbol, bool no_space_after, std::size_t begin = 0);
  static Token extra_space(std::size_t begin = 0);
  static Token newline(std::size_t begin = 0);
  static Token no_space();
  static Token raw(std::string bytes, std::size_t begin = 0,
                   std::size_t end = 0);

  friend bool operator==(const Token& a, const Token& b) {
    return a.kind == b.kind && a.text == b.text &&
           a.no_space_after == b.no_space_after &&
           a.case_class == b.case_class;
  }
};

const char* token_kind_name(Token::Kind kind);

// Splits text into tokens such that detokenize(tokenize(t)) == t for any
// byte string. The space between a word and the next word is implicit; a
// punctuation token with no_space_after == false consumes exactly one
// following space.
std::vector<Token> tokenize(std::string_view text);

// Re-emits the original text. Throws StructureError on malformed tokens
// (empty words, multi-byte punctuation, symbols outside the set).
std::string detokenize(std::span<const Token> tokens);

// Sentence-position tracker shared by the encoder and decoder: true at
// the start of text and after '.', '!' or '?'. Word and raw tokens clear
// it; spaces, newlines and no-space markers leave it unchanged.
struct SpacingState {
  bool expects_sentence_case = true;

  void advance(const Token& token);
};

// End of the word starting at `pos` (text[pos] must be a letter). A ' or
// - stays inside the word only when a letter follows it.
std::size_t scan_word_end(std::string_view text, std::size_t pos);

// True when `bytes` parses as exactly one word token covering the whole
// string.
bool is_single_word(std::string_view bytes);

}  // namespace wordpack

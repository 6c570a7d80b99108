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

#include "wordpack/tokenizer.hpp"

#include "wordpack/alphabet.hpp"

namespace wordpack {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

}  // namespace

CaseClass classify_case(std::string_view word) {
  bool any_letter = false;
  bool all_lower = true;
  bool all_upper = true;
  bool first_upper = false;
  bool rest_all_lower = true;
  bool rest_all_upper = true;
  for (char c : word) {
    if (!is_ascii_letter(c)) continue;
    if (!any_letter) {
      any_letter = true;
      first_upper = is_upper(c);
    } else {
      if (is_upper(c)) rest_all_lower = false;
      if (is_lower(c)) rest_all_upper = false;
    }
    if (is_upper(c)) all_lower = false;
    if (is_lower(c)) all_upper = false;
  }
  if (!any_letter) {
    throw StructureError("cannot classify the case of a word with no letters");
  }
  if (all_lower) return CaseClass::kLower;
  if (all_upper) return CaseClass::kUpper;
  if (first_upper && rest_all_lower) return CaseClass::kSentence;
  if (!first_upper && rest_all_upper) return CaseClass::kToggle;
  return CaseClass::kOther;
}

Token Token::word(std::string surface, std::size_t begin, std::size_t end) {
  Token t;
  t.kind = Kind::kWord;
  t.case_class = classify_case(surface);
  t.text = std::move(surface);
  t.begin = begin;
  t.end = end;
  return t;
}

Token Token::punct(char symbol, bool no_space_after, std::size_t begin) {
  Token t;
  t.kind = Kind::kPunct;
  t.text.assign(1, symbol);
  t.no_space_after = no_space_after;
  t.begin = begin;
  t.end = begin + (no_space_after ? 1 : 2);
  return t;
}

Token Token::extra_space(std::size_t begin) {
  Token t;
  t.kind = Kind::kExtraSpace;
  t.begin = begin;
  t.end = begin + 1;
  return t;
}

Token Token::newline(std::size_t begin) {
  Token t;
  t.kind = Kind::kNewline;
  t.begin = begin;
  t.end = begin + 1;
  return t;
}

Token Token::no_space() {
  Token t;
  t.kind = Kind::kNoSpace;
  return t;
}

Token Token::raw(std::string bytes, std::size_t begin, std::size_t end) {
  Token t;
  t.kind = Kind::kRaw;
  t.text = std::move(bytes);
  t.begin = begin;
  t.end = end;
  return t;
}

const char* token_kind_name(Token::Kind kind) {
  switch (kind) {
    case Token::Kind::kWord: return "WORD";
    case Token::Kind::kPunct: return "PUNCT";
    case Token::Kind::kExtraSpace: return "EXTRA_SPACE";
    case Token::Kind::kNewline: return "NEWLINE";
    case Token::Kind::kNoSpace: return "NO_SPACE";
    case Token::Kind::kRaw: return "RAW";
  }
  return "UNKNOWN";
}

std::size_t scan_word_end(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  while (i < text.size()) {
    const char c = text[i];
    if (is_ascii_letter(c)) {
      ++i;
      continue;
    }
    if ((c == '\'' || c == '-') && i + 1 < text.size() &&
        is_ascii_letter(text[i + 1])) {
      i += 2;
      continue;
    }
    break;
  }
  return i;
}

bool is_single_word(std::string_view bytes) {
  if (bytes.empty() || !is_ascii_letter(bytes[0])) return false;
  return scan_word_end(bytes, 0) == bytes.size();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  out.reserve(text.size() / 4 + 1);
  const std::size_t n = text.size();
  std::size_t i = 0;
  // Mirrors the detokenizer: true while an implicit space is owed by the
  // last word, so the tokenizer knows which single space to drop.
  bool pending_space = false;
  while (i < n) {
    const char c = text[i];
    if (c == ' ' || c == '\n') {
      std::size_t g = i;
      while (g < n && (text[g] == ' ' || text[g] == '\n')) ++g;
      const bool next_is_word = g < n && is_ascii_letter(text[g]);
      for (std::size_t k = i; k < g; ++k) {
        if (text[k] == '\n') {
          out.push_back(Token::newline(k));
          pending_space = false;
        } else if (k + 1 == g && pending_space && next_is_word) {
          // This space is the implicit one the next word restores.
        } else {
          out.push_back(Token::extra_space(k));
        }
      }
      i = g;
    } else if (is_ascii_letter(c)) {
      const std::size_t end = scan_word_end(text, i);
      out.push_back(Token::word(std::string(text.substr(i, end - i)), i, end));
      pending_space = true;
      i = end;
    } else if (is_punct_symbol(c)) {
      const bool no_space_after = !(i + 1 < n && text[i + 1] == ' ');
      out.push_back(Token::punct(c, no_space_after, i));
      pending_space = false;
      i += no_space_after ? 1 : 2;
    } else {
      std::size_t end = i;
      while (end < n && !is_ascii_letter(text[end]) &&
             !is_punct_symbol(text[end]) && text[end] != ' ' &&
             text[end] != '\n') {
        ++end;
      }
      out.push_back(Token::raw(std::string(text.substr(i, end - i)), i, end));
      pending_space = false;
      i = end;
    }
  }
  return out;
}

std::string detokenize(std::span<const Token> tokens) {
  std::string out;
  bool pending_space = false;
  for (const Token& t : tokens) {
    switch (t.kind) {
      case Token::Kind::kWord:
        if (t.text.empty()) throw StructureError("empty word token");
        if (pending_space) out.push_back(' ');
        out.append(t.text);
        pending_space = true;
        break;
      case Token::Kind::kPunct:
        if (t.text.size() != 1 || !is_punct_symbol(t.text[0])) {
          throw StructureError("punctuation token must hold one symbol");
        }
        out.append(t.text);
        pending_space = false;
        if (!t.no_space_after) out.push_back(' ');
        break;
      case Token::Kind::kExtraSpace:
        out.push_back(' ');
        break;
      case Token::Kind::kNewline:
        out.push_back('\n');
        pending_space = false;
        break;
      case Token::Kind::kNoSpace:
        pending_space = false;
        break;
      case Token::Kind::kRaw:
        out.append(t.text);
        pending_space = false;
        break;
    }
  }
  return out;
}

void SpacingState::advance(const Token& token) {
  switch (token.kind) {
    case Token::Kind::kWord:
    case Token::Kind::kRaw:
      expects_sentence_case = false;
      break;
    case Token::Kind::kPunct: {
      const char c = token.text.empty() ? '\0' : token.text[0];
      expects_sentence_case = c == '.' || c == '!' || c == '?';
      break;
    }
    case Token::Kind::kExtraSpace:
    case Token::Kind::kNewline:
    case Token::Kind::kNoSpace:
      break;
  }
}

}  // namespace wordpack

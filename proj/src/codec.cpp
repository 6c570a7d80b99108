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

#include "wordpack/codec.hpp"

#include <optional>
#include <string>

#include "wordpack/alphabet.hpp"

namespace wordpack {

namespace {

constexpr unsigned kRawLengthBits = 32;
constexpr std::uint64_t kRawChunkMax = 0xFFFFFFFFull;

// A maximal sequence of same-class Upper or Toggle words, possibly with
// punctuation, spaces or newlines between them, that is worth bracketing
// with a begin/end marker pair instead of per-word markers.
struct CaseRun {
  std::size_t first_word = 0;
  std::size_t last_word = 0;
  CaseClass cls = CaseClass::kUpper;
};

bool is_run_neutral(Token::Kind kind) {
  return kind == Token::Kind::kPunct || kind == Token::Kind::kExtraSpace ||
         kind == Token::Kind::kNewline || kind == Token::Kind::kNoSpace;
}

bool is_run_class(CaseClass cls) {
  return cls == CaseClass::kUpper || cls == CaseClass::kToggle;
}

std::vector<CaseRun> plan_case_runs(std::span<const Token> tokens) {
  std::vector<CaseRun> runs;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token& t = tokens[i];
    if (t.kind == Token::Kind::kWord && is_run_class(t.case_class)) {
      std::size_t last = i;
      std::size_t words = 1;
      std::size_t j = i + 1;
      while (j < tokens.size()) {
        const Token& u = tokens[j];
        if (u.kind == Token::Kind::kWord) {
          if (u.case_class != t.case_class) break;
          last = j;
          ++words;
          ++j;
          continue;
        }
        if (!is_run_neutral(u.kind)) break;
        ++j;
      }
      if (words >= 2) {
        runs.push_back({i, last, t.case_class});
        i = last + 1;
        continue;
      }
    }
    ++i;
  }
  return runs;
}

std::string transform_sentence(std::string_view lower) {
  std::string out(lower);
  out[0] = to_upper_ascii(out[0]);
  return out;
}

std::string transform_toggle(std::string_view lower) {
  std::string out(lower);
  for (std::size_t i = 1; i < out.size(); ++i) {
    out[i] = to_upper_ascii(out[i]);
  }
  return out;
}

// Lowercase "i" regenerates as uppercase when it arrives as a bare
// dictionary code outside a sentence position; the first-person pronoun
// dominates English text so this direction is free. A genuinely
// lowercase "i" travels as a literal instead.
bool upper_by_default(std::string_view lower) { return lower == "i"; }

enum class WordRoute { kDict, kLiteral, kRawEscape };

// A bare dictionary code regenerates capitalized at a sentence position,
// so purely lowercase words there must take the literal route (literals
// never change case). Likewise a lowercase "i" anywhere.
bool must_take_literal(CaseClass cls, bool expects_sentence,
                       std::string_view lower) {
  if (cls != CaseClass::kLower) return false;
  return expects_sentence || upper_by_default(lower);
}

WordRoute choose_route(const Token& word, std::string_view lower,
                       bool in_run, bool expects_sentence,
                       const Dictionary& dict) {
  if (word.case_class == CaseClass::kOther) return WordRoute::kRawEscape;
  if (!in_run && must_take_literal(word.case_class, expects_sentence, lower)) {
    return WordRoute::kLiteral;
  }
  if (dict.lookup_code(lower, /*trailing_space=*/true).has_value()) {
    return WordRoute::kDict;
  }
  return WordRoute::kLiteral;
}

// Case marker for a word outside any run, or empty when the decoder's
// defaults already regenerate the original casing.
std::optional<Reserved> single_case_marker(CaseClass cls, std::string_view lower,
                                           bool expects_sentence,
                                           WordRoute route) {
  switch (cls) {
    case CaseClass::kLower:
      return std::nullopt;
    case CaseClass::kSentence:
    case CaseClass::kTitle:
      if (!expects_sentence || route == WordRoute::kLiteral) {
        return Reserved::kCaseTitleSingle;
      }
      return std::nullopt;
    case CaseClass::kUpper: {
      const bool single_letter = lower.size() == 1;
      if (single_letter && (expects_sentence || upper_by_default(lower))) {
        return route == WordRoute::kLiteral
                   ? std::optional(Reserved::kCaseUpperSingle)
                   : std::nullopt;
      }
      return Reserved::kCaseUpperSingle;
    }
    case CaseClass::kToggle:
      return Reserved::kCaseToggleSingle;
    case CaseClass::kOther:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

CasePlan case_plan(std::span<const Token> tokens, std::size_t index,
                   const SpacingState& state) {
  if (index >= tokens.size() || tokens[index].kind != Token::Kind::kWord) {
    throw StructureError("case_plan index must name a word token");
  }
  CasePlan plan;
  const Token& word = tokens[index];
  for (const CaseRun& run : plan_case_runs(tokens)) {
    if (index < run.first_word || index > run.last_word) continue;
    if (index == run.first_word) {
      plan.before.push_back(run.cls == CaseClass::kUpper
                                ? Reserved::kCaseUpperBegin
                                : Reserved::kCaseToggleBegin);
    }
    if (index == run.last_word) {
      plan.after.push_back(run.cls == CaseClass::kUpper
                               ? Reserved::kCaseUpperEnd
                               : Reserved::kCaseToggleEnd);
    }
    return plan;
  }
  const std::string lower = to_lower_ascii(word.text);
  const auto marker = single_case_marker(word.case_class, lower,
                                         state.expects_sentence_case,
                                         WordRoute::kDict);
  if (marker) plan.before.push_back(*marker);
  return plan;
}

Payload encode(std::span<const Token> tokens, const Dictionary& dict) {
  Payload p;
  const std::vector<CaseRun> runs = plan_case_runs(tokens);
  std::size_t run_idx = 0;
  SpacingState spacing;

  const auto emit_code = [&p](std::uint32_t code) {
    p.bits.write_bits(code, kCodeBits);
    ++p.token_count;
  };
  const auto emit_reserved = [&emit_code](Reserved r) {
    emit_code(reserved_code(r));
  };
  const auto emit_raw_escape = [&](std::string_view bytes) {
    std::size_t off = 0;
    do {
      const std::size_t chunk = static_cast<std::size_t>(
          std::min<std::uint64_t>(bytes.size() - off, kRawChunkMax));
      emit_reserved(Reserved::kRawBegin);
      p.bits.write_bits(static_cast<std::uint32_t>(chunk), kRawLengthBits);
      for (std::size_t k = 0; k < chunk; ++k) {
        p.bits.write_bits(static_cast<std::uint8_t>(bytes[off + k]), 8);
      }
      p.raw_bytes += chunk;
      off += chunk;
    } while (off < bytes.size());
  };

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    switch (t.kind) {
      case Token::Kind::kWord: {
        if (t.text.empty()) throw StructureError("empty word token");
        ++p.word_count;
        if (t.case_class == CaseClass::kOther) {
          emit_raw_escape(t.text);
          break;
        }
        const std::string lower = to_lower_ascii(t.text);
        const bool in_run = run_idx < runs.size() &&
                            i >= runs[run_idx].first_word &&
                            i <= runs[run_idx].last_word;
        const WordRoute route = choose_route(
            t, lower, in_run, spacing.expects_sentence_case, dict);
        if (in_run && i == runs[run_idx].first_word) {
          emit_reserved(runs[run_idx].cls == CaseClass::kUpper
                            ? Reserved::kCaseUpperBegin
                            : Reserved::kCaseToggleBegin);
        }
        if (!in_run) {
          const auto marker =
              single_case_marker(t.case_class, lower,
                                 spacing.expects_sentence_case, route);
          if (marker) emit_reserved(*marker);
        }
        if (route == WordRoute::kDict) {
          emit_code(*dict.lookup_code(lower, /*trailing_space=*/true));
        } else {
          emit_reserved(Reserved::kLiteralBegin);
          for (char c : lower) {
            const auto code = char_code(c);
            if (!code) {
              throw StructureError("word character '" + std::string(1, c) +
                                   "' has no literal encoding");
            }
            p.bits.write_bits(*code, kCharCodeBits);
          }
          p.bits.write_bits(kCharCodeTerminator, kCharCodeBits);
          p.literal_chars += lower.size();
        }
        if (in_run && i == runs[run_idx].last_word) {
          emit_reserved(runs[run_idx].cls == CaseClass::kUpper
                            ? Reserved::kCaseUpperEnd
                            : Reserved::kCaseToggleEnd);
          ++run_idx;
        }
        break;
      }
      case Token::Kind::kPunct: {
        if (t.text.size() != 1 || !is_punct_symbol(t.text[0])) {
          throw StructureError("punctuation token must hold one symbol");
        }
        const auto code = dict.lookup_code(t.text, !t.no_space_after);
        if (!code) {
          throw std::logic_error(
              "dictionary is missing a fixed punctuation entry");
        }
        emit_code(*code);
        ++p.punct_count;
        break;
      }
      case Token::Kind::kExtraSpace:
        emit_reserved(Reserved::kSpaceExplicit);
        break;
      case Token::Kind::kNewline:
        emit_reserved(Reserved::kNewline);
        break;
      case Token::Kind::kNoSpace:
        emit_reserved(Reserved::kNoSpace);
        break;
      case Token::Kind::kRaw:
        emit_raw_escape(t.text);
        break;
    }
    spacing.advance(t);
  }

  // END_OF_STREAM closes the stream but stays outside token_count.
  p.bits.write_bits(reserved_code(Reserved::kEndOfStream), kCodeBits);
  p.content_bits = p.bits.bit_length();
  p.bits.pad_to_byte();
  return p;
}

namespace {

bool is_literal_word_shape(std::string_view s) {
  if (s.empty()) return false;
  if (!(s[0] >= 'a' && s[0] <= 'z')) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c >= 'a' && c <= 'z') continue;
    if ((c == '\'' || c == '-') && i + 1 < s.size() && s[i + 1] >= 'a' &&
        s[i + 1] <= 'z') {
      continue;
    }
    return false;
  }
  return true;
}

}  // namespace

std::vector<Token> decode(const BitBuffer& bits, std::uint64_t content_bits,
                          const Dictionary& dict) {
  BitReader reader(bits, content_bits);
  std::vector<Token> out;
  SpacingState spacing;
  enum class RunState { kNone, kUpper, kToggle };
  RunState run = RunState::kNone;
  std::optional<Reserved> pending_case;

  const auto emit_word = [&](std::string lower, bool from_dict) {
    std::string surface;
    if (pending_case) {
      switch (*pending_case) {
        case Reserved::kCaseUpperSingle:
          surface = to_upper_ascii(lower);
          break;
        case Reserved::kCaseTitleSingle:
          surface = transform_sentence(lower);
          break;
        default:
          surface = transform_toggle(lower);
          break;
      }
      pending_case.reset();
    } else if (run == RunState::kUpper) {
      surface = to_upper_ascii(lower);
    } else if (run == RunState::kToggle) {
      surface = transform_toggle(lower);
    } else if (from_dict && spacing.expects_sentence_case) {
      surface = transform_sentence(lower);
    } else if (from_dict && upper_by_default(lower)) {
      surface = to_upper_ascii(lower);
    } else {
      surface = std::move(lower);
    }
    out.push_back(Token::word(std::move(surface)));
    spacing.advance(out.back());
  };

  bool done = false;
  while (!done) {
    const std::uint32_t code = reader.read_bits(kCodeBits);
    const CodeLookup look = dict.lookup_surface(code);
    const bool starts_word =
        (look.entry != nullptr && !look.entry->is_punctuation()) ||
        look.reserved == Reserved::kLiteralBegin;
    if (pending_case && !starts_word) {
      throw StructureError("case marker not followed by a word");
    }
    if (look.entry != nullptr) {
      const DictEntry& e = *look.entry;
      if (e.is_punctuation()) {
        out.push_back(Token::punct(e.surface[0], !e.trailing_space));
        spacing.advance(out.back());
      } else {
        emit_word(e.surface, /*from_dict=*/true);
      }
      continue;
    }
    if (!look.reserved) {
      throw CorruptionError("unassigned 19-bit code " + std::to_string(code));
    }
    switch (*look.reserved) {
      case Reserved::kLiteralBegin: {
        std::string lower;
        for (;;) {
          const std::uint32_t c = reader.read_bits(kCharCodeBits);
          if (c == kCharCodeTerminator) break;
          lower.push_back(char_for_code(static_cast<std::uint8_t>(c)));
        }
        if (!is_literal_word_shape(lower)) {
          throw CorruptionError("literal escape does not spell a word");
        }
        emit_word(std::move(lower), /*from_dict=*/false);
        break;
      }
      case Reserved::kRawBegin: {
        const std::uint32_t length = reader.read_bits(kRawLengthBits);
        if (std::uint64_t{length} * 8 > reader.remaining()) {
          throw TruncationError("raw escape longer than the payload");
        }
        std::string bytes;
        bytes.reserve(length);
        for (std::uint32_t k = 0; k < length; ++k) {
          bytes.push_back(static_cast<char>(reader.read_bits(8)));
        }
        Token t = is_single_word(bytes) ? Token::word(std::move(bytes))
                                        : Token::raw(std::move(bytes));
        out.push_back(std::move(t));
        spacing.advance(out.back());
        break;
      }
      case Reserved::kCaseUpperSingle:
      case Reserved::kCaseTitleSingle:
      case Reserved::kCaseToggleSingle:
        if (run != RunState::kNone) {
          throw StructureError("case marker inside a case run");
        }
        pending_case = *look.reserved;
        break;
      case Reserved::kCaseUpperBegin:
        if (run != RunState::kNone) throw StructureError("nested case run");
        run = RunState::kUpper;
        break;
      case Reserved::kCaseToggleBegin:
        if (run != RunState::kNone) throw StructureError("nested case run");
        run = RunState::kToggle;
        break;
      case Reserved::kCaseUpperEnd:
        if (run != RunState::kUpper) {
          throw StructureError("unmatched uppercase run end");
        }
        run = RunState::kNone;
        break;
      case Reserved::kCaseToggleEnd:
        if (run != RunState::kToggle) {
          throw StructureError("unmatched toggle run end");
        }
        run = RunState::kNone;
        break;
      case Reserved::kSpaceExplicit:
        out.push_back(Token::extra_space());
        spacing.advance(out.back());
        break;
      case Reserved::kNewline:
        out.push_back(Token::newline());
        spacing.advance(out.back());
        break;
      case Reserved::kNoSpace:
        out.push_back(Token::no_space());
        spacing.advance(out.back());
        break;
      case Reserved::kEndOfStream:
        if (run != RunState::kNone) {
          throw StructureError("case run not closed before end of stream");
        }
        done = true;
        break;
    }
  }
  if (!reader.at_end()) {
    throw CorruptionError("content after the end-of-stream code");
  }
  return out;
}

std::vector<Token> decode(const Payload& payload, const Dictionary& dict) {
  return decode(payload.bits, payload.content_bits, dict);
}

}  // namespace wordpack

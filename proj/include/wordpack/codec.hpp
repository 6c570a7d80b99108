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
#include <vector>

#include "wordpack/bitstream.hpp"
#include "wordpack/dictionary.hpp"
#include "wordpack/tokenizer.hpp"

namespace wordpack {

// A reduced token stream: 19-bit codes with literal and raw escapes,
// closed by END_OF_STREAM and zero-padded to a byte boundary.
struct Payload {
  BitBuffer bits;
  std::uint64_t content_bits = 0;  // through END_OF_STREAM, before padding
  std::uint64_t token_count = 0;   // 19-bit codes, END_OF_STREAM excluded
  std::uint64_t word_count = 0;    // word tokens encoded
  std::uint64_t punct_count = 0;   // punctuation tokens encoded
  std::uint64_t literal_chars = 0; // characters spelled out in literals
  std::uint64_t raw_bytes = 0;     // bytes carried by raw escapes
};

// Case markers emitted around one word: `before` precede its code,
// `after` follow it. Words inside a case run get markers only at the run
// boundaries.
struct CasePlan {
  std::vector<Reserved> before;
  std::vector<Reserved> after;
};

// Case markers for the dictionary-coded word at `index`, given the
// sentence-position state just before it. Pure; exposed for testing.
CasePlan case_plan(std::span<const Token> tokens, std::size_t index,
                   const SpacingState& state);

// Reduces a token stream to 19-bit codes. Every word is matched against
// the dictionary by lowercase surface; misses are spelled out as literals
// and words with irregular case travel as raw escapes.
Payload encode(std::span<const Token> tokens, const Dictionary& dict);

// Inverse of encode. Rejects unassigned codes, dangling case structure,
// missing END_OF_STREAM and trailing content. `content_bits` bounds the
// significant bits when the buffer carries padding.
std::vector<Token> decode(const BitBuffer& bits, std::uint64_t content_bits,
                          const Dictionary& dict);
std::vector<Token> decode(const Payload& payload, const Dictionary& dict);

}  // namespace wordpack

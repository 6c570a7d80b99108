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
#include <optional>
#include <string>
#include <string_view>

namespace wordpack {

// The 27 punctuation symbols the tokenizer treats as standalone tokens, in
// code order. Everything printable outside this set, letters, digits and
// whitespace is carried as raw bytes.
inline constexpr std::string_view kPunctuation =
    ".,;:!?'\"-()[]{}/\\@#$%&*+=_~";

// 6-bit character alphabet used by dictionary records and literal word
// escapes. Code 0 terminates a character sequence; 1..26 are 'a'..'z',
// 27..36 are '0'..'9', 37..63 are the punctuation symbols above.
inline constexpr unsigned kCharCodeBits = 6;
inline constexpr std::uint8_t kCharCodeTerminator = 0;

bool is_ascii_letter(char c);
bool is_ascii_digit(char c);
bool is_punct_symbol(char c);

char to_lower_ascii(char c);
char to_upper_ascii(char c);
std::string to_lower_ascii(std::string_view s);
std::string to_upper_ascii(std::string_view s);

// Maps a character to its 6-bit code. Empty for characters outside the
// alphabet (uppercase letters included; callers lowercase first).
std::optional<std::uint8_t> char_code(char c);

// Inverse of char_code for codes 1..63. Throws RangeError for 0 and
// anything above 63.
char char_for_code(std::uint8_t code);

// True when `s` is a well-formed dictionary word surface: lowercase
// letters plus embedded '\'' or '-', starts with a letter, every '\'' or
// '-' is followed by a letter, length 1..64.
bool is_valid_word_surface(std::string_view s);

}  // namespace wordpack

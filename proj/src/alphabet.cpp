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

#include "wordpack/alphabet.hpp"

#include <array>

#include "wordpack/errors.hpp"

namespace wordpack {

namespace {

constexpr std::size_t kMaxSurface = 64;

struct CharTables {
  std::array<std::int8_t, 256> code{};
  std::array<char, 64> chr{};

  constexpr CharTables() {
    for (auto& c : code) c = -1;
    chr[0] = '\0';
    for (int i = 0; i < 26; ++i) {
      code[static_cast<unsigned char>('a' + i)] = static_cast<std::int8_t>(1 + i);
      chr[1 + i] = static_cast<char>('a' + i);
    }
    for (int i = 0; i < 10; ++i) {
      code[static_cast<unsigned char>('0' + i)] = static_cast<std::int8_t>(27 + i);
      chr[27 + i] = static_cast<char>('0' + i);
    }
    for (std::size_t i = 0; i < kPunctuation.size(); ++i) {
      code[static_cast<unsigned char>(kPunctuation[i])] =
          static_cast<std::int8_t>(37 + i);
      chr[37 + i] = kPunctuation[i];
    }
  }
};

constexpr CharTables kTables{};

}  // namespace

bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

bool is_punct_symbol(char c) {
  const std::int8_t code = kTables.code[static_cast<unsigned char>(c)];
  return code >= 37;
}

char to_lower_ascii(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

char to_upper_ascii(char c) {
  return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = to_lower_ascii(c);
  return out;
}

std::string to_upper_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = to_upper_ascii(c);
  return out;
}

std::optional<std::uint8_t> char_code(char c) {
  const std::int8_t code = kTables.code[static_cast<unsigned char>(c)];
  if (code < 0) return std::nullopt;
  return static_cast<std::uint8_t>(code);
}

char char_for_code(std::uint8_t code) {
  if (code == kCharCodeTerminator || code > 63) {
    throw RangeError("no character for 6-bit code " + std::to_string(code));
  }
  return kTables.chr[code];
}

bool is_valid_word_surface(std::string_view s) {
  if (s.empty() || s.size() > kMaxSurface) return false;
  if (!(s[0] >= 'a' && s[0] <= 'z')) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c >= 'a' && c <= 'z') continue;
    if (c == '\'' || c == '-') {
      if (i + 1 >= s.size()) return false;
      const char next = s[i + 1];
      if (!(next >= 'a' && next <= 'z')) return false;
      continue;
    }
    return false;
  }
  return true;
}

}  // namespace wordpack

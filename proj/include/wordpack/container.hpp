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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordpack/codec.hpp"
#include "wordpack/dictionary.hpp"
#include "wordpack/second_stage.hpp"

namespace wordpack {

// Container layout, all integers big-endian:
//   bytes 0..3   magic "WPK1"
//   byte  4      format version (1)
//   byte  5      flags; bit 0 = body passed through the second stage,
//                all other bits must be zero
//   bytes 6..13  digest of the dictionary the payload was coded against
//   bytes 14..21 payload length in bits, padding excluded
//   bytes 22..   body
inline constexpr std::array<std::uint8_t, 4> kContainerMagic = {'W', 'P', 'K',
                                                                '1'};
inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::uint8_t kFlagSecondStage = 0x01;
inline constexpr std::size_t kContainerHeaderSize = 22;

struct ContainerInfo {
  bool second_stage = false;
  std::uint64_t dict_digest = 0;
  std::uint64_t payload_bit_length = 0;
  std::size_t body_size = 0;
};

struct CompressOptions {
  bool second_stage = true;
};

// Validates the fixed header fields without touching the body.
ContainerInfo inspect(std::span<const std::uint8_t> container);

// Tokenize + encode + (optionally) second stage, framed as above. When
// `payload_out` is given it receives the reduced payload for reporting.
std::vector<std::uint8_t> compress(std::string_view text,
                                   const Dictionary& dict,
                                   CompressOptions options = {},
                                   const SecondStage& stage = raw_deflate_stage(),
                                   Payload* payload_out = nullptr);

// Full inverse; returns the original text. Throws FormatError,
// TruncationError, WrongDictionaryError or CorruptionError as appropriate.
std::string decompress(std::span<const std::uint8_t> container,
                       const Dictionary& dict,
                       const SecondStage& stage = raw_deflate_stage());

}  // namespace wordpack

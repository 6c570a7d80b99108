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

#include "wordpack/errors.hpp"

namespace wordpack {

// Append-only bit vector with MSB-first packing: the first bit written
// lands in the most significant bit of byte 0. Field widths of 1..32 bits
// are supported and fields may straddle byte boundaries.
class BitBuffer {
 public:
  BitBuffer() = default;

  // Wraps `bytes` as a buffer holding `bit_length` bits. Throws
  // TruncationError if the bytes cannot hold that many bits.
  static BitBuffer from_bytes(std::vector<std::uint8_t> bytes,
                              std::uint64_t bit_length);

  // Appends the low `width` bits of `value`, most significant first.
  // Throws RangeError if `width` is outside 1..32 or `value` has bits
  // above `width`.
  void write_bits(std::uint32_t value, unsigned width);

  // Appends zero bits until the length is a whole number of bytes.
  void pad_to_byte();

  std::uint64_t bit_length() const { return bit_length_; }
  bool empty() const { return bit_length_ == 0; }

  // Backing bytes; the last byte may be partially filled, unused low bits
  // are zero.
  std::span<const std::uint8_t> bytes() const { return bytes_; }
  std::vector<std::uint8_t> take_bytes() && { return std::move(bytes_); }

  // True when every bit in the final byte beyond bit_length() is zero.
  bool padding_is_zero() const;

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t bit_length_ = 0;
};

// Cursor-based reader over a BitBuffer. An explicit limit (defaulting to
// the buffer's bit length) bounds reads so padding stays invisible.
class BitReader {
 public:
  explicit BitReader(const BitBuffer& buffer);
  BitReader(const BitBuffer& buffer, std::uint64_t limit_bits);

  // Reads `width` bits MSB-first. Throws RangeError for widths outside
  // 1..32 and TruncationError when fewer than `width` bits remain.
  std::uint32_t read_bits(unsigned width);

  std::uint64_t cursor() const { return cursor_; }
  std::uint64_t remaining() const { return limit_ - cursor_; }
  bool at_end() const { return cursor_ == limit_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::uint64_t limit_;
  std::uint64_t cursor_ = 0;
};

}  // namespace wordpack

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

#include "wordpack/bitstream.hpp"

#include <algorithm>
#include <string>

namespace wordpack {

namespace {

std::uint32_t low_mask(unsigned bits) {
  return bits >= 32 ? 0xFFFFFFFFu : (1u << bits) - 1u;
}

void check_width(unsigned width) {
  if (width < 1 || width > 32) {
    throw RangeError("bit field width " + std::to_string(width) +
                     " outside supported range 1..32");
  }
}

}  // namespace

BitBuffer BitBuffer::from_bytes(std::vector<std::uint8_t> bytes,
                                std::uint64_t bit_length) {
  if (bit_length > std::uint64_t{8} * bytes.size()) {
    throw TruncationError(std::to_string(bytes.size()) +
                          " bytes cannot hold " + std::to_string(bit_length) +
                          " bits");
  }
  BitBuffer buf;
  buf.bytes_ = std::move(bytes);
  buf.bit_length_ = bit_length;
  return buf;
}

void BitBuffer::write_bits(std::uint32_t value, unsigned width) {
  check_width(width);
  if (width < 32 && (value >> width) != 0) {
    throw RangeError("value " + std::to_string(value) + " does not fit in " +
                     std::to_string(width) + " bits");
  }
  unsigned left = width;
  while (left > 0) {
    const unsigned used = static_cast<unsigned>(bit_length_ & 7u);
    if (used == 0 && (bit_length_ >> 3) == bytes_.size()) {
      bytes_.push_back(0);
    }
    const unsigned room = 8 - used;
    const unsigned take = std::min(room, left);
    const std::uint32_t chunk = (value >> (left - take)) & low_mask(take);
    bytes_.back() |= static_cast<std::uint8_t>(chunk << (room - take));
    bit_length_ += take;
    left -= take;
  }
}

void BitBuffer::pad_to_byte() { bit_length_ = (bit_length_ + 7u) & ~std::uint64_t{7}; }

bool BitBuffer::padding_is_zero() const {
  const unsigned used = static_cast<unsigned>(bit_length_ & 7u);
  if (used == 0) return true;
  const std::uint8_t tail = bytes_[static_cast<std::size_t>(bit_length_ >> 3)];
  return (tail & low_mask(8 - used)) == 0;
}

BitReader::BitReader(const BitBuffer& buffer)
    : BitReader(buffer, buffer.bit_length()) {}

BitReader::BitReader(const BitBuffer& buffer, std::uint64_t limit_bits)
    : bytes_(buffer.bytes()), limit_(limit_bits) {
  if (limit_ > buffer.bit_length()) {
    throw TruncationError("reader limit " + std::to_string(limit_bits) +
                          " exceeds buffer length " +
                          std::to_string(buffer.bit_length()));
  }
}

std::uint32_t BitReader::read_bits(unsigned width) {
  check_width(width);
  if (cursor_ + width > limit_) {
    throw TruncationError("read of " + std::to_string(width) +
                          " bits with only " + std::to_string(remaining()) +
                          " remaining");
  }
  std::uint32_t value = 0;
  unsigned left = width;
  while (left > 0) {
    const std::size_t index = static_cast<std::size_t>(cursor_ >> 3);
    const unsigned offset = static_cast<unsigned>(cursor_ & 7u);
    const unsigned avail = 8 - offset;
    const unsigned take = std::min(avail, left);
    const std::uint32_t chunk =
        (static_cast<std::uint32_t>(bytes_[index]) >> (avail - take)) &
        low_mask(take);
    value = (value << take) | chunk;
    cursor_ += take;
    left -= take;
  }
  return value;
}

}  // namespace wordpack

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

#include "wordpack/container.hpp"

#include <cstring>

#include "wordpack/tokenizer.hpp"

namespace wordpack {

namespace {

void put_u64_be(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

std::uint64_t get_u64_be(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

ContainerInfo inspect(std::span<const std::uint8_t> container) {
  if (container.size() >= 4 &&
      std::memcmp(container.data(), kContainerMagic.data(), 4) != 0) {
    throw FormatError("not a wordpack container: bad magic");
  }
  if (container.size() < kContainerHeaderSize) {
    throw TruncationError("container shorter than its header");
  }
  const std::uint8_t version = container[4];
  if (version != kContainerVersion) {
    throw FormatError("unsupported container version " +
                      std::to_string(version));
  }
  const std::uint8_t flags = container[5];
  if ((flags & ~kFlagSecondStage) != 0) {
    throw FormatError("unknown container flag bits set");
  }
  ContainerInfo info;
  info.second_stage = (flags & kFlagSecondStage) != 0;
  info.dict_digest = get_u64_be(container.data() + 6);
  info.payload_bit_length = get_u64_be(container.data() + 14);
  info.body_size = container.size() - kContainerHeaderSize;
  return info;
}

std::vector<std::uint8_t> compress(std::string_view text,
                                   const Dictionary& dict,
                                   CompressOptions options,
                                   const SecondStage& stage,
                                   Payload* payload_out) {
  Payload payload = encode(tokenize(text), dict);
  const auto payload_bytes = payload.bits.bytes();

  std::vector<std::uint8_t> out;
  out.reserve(kContainerHeaderSize + payload_bytes.size());
  out.insert(out.end(), kContainerMagic.begin(), kContainerMagic.end());
  out.push_back(kContainerVersion);
  out.push_back(options.second_stage ? kFlagSecondStage : 0);
  put_u64_be(out, dict.digest());
  put_u64_be(out, payload.content_bits);
  if (options.second_stage) {
    const std::vector<std::uint8_t> body =
        stage.deflate({payload_bytes.data(), payload_bytes.size()});
    out.insert(out.end(), body.begin(), body.end());
  } else {
    out.insert(out.end(), payload_bytes.begin(), payload_bytes.end());
  }
  if (payload_out != nullptr) *payload_out = std::move(payload);
  return out;
}

std::string decompress(std::span<const std::uint8_t> container,
                       const Dictionary& dict, const SecondStage& stage) {
  const ContainerInfo info = inspect(container);
  if (info.dict_digest != dict.digest()) {
    throw WrongDictionaryError(
        "container was produced with a different dictionary (digest " +
        std::to_string(info.dict_digest) + ", have " +
        std::to_string(dict.digest()) + ")");
  }
  const std::size_t expected_bytes =
      static_cast<std::size_t>((info.payload_bit_length + 7) / 8);
  const std::span<const std::uint8_t> body =
      container.subspan(kContainerHeaderSize);

  std::vector<std::uint8_t> payload_bytes;
  if (info.second_stage) {
    payload_bytes = stage.inflate(body, expected_bytes);
  } else {
    if (body.size() < expected_bytes) {
      throw TruncationError("container body holds " +
                            std::to_string(body.size()) + " bytes, header " +
                            "declares " + std::to_string(expected_bytes));
    }
    if (body.size() > expected_bytes) {
      throw FormatError("container body longer than the declared payload");
    }
    payload_bytes.assign(body.begin(), body.end());
  }

  const BitBuffer bits =
      BitBuffer::from_bytes(std::move(payload_bytes), info.payload_bit_length);
  if (!bits.padding_is_zero()) {
    throw CorruptionError("nonzero padding bits after the payload");
  }
  return detokenize(decode(bits, info.payload_bit_length, dict));
}

}  // namespace wordpack

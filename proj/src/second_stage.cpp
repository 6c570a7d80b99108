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

#include "wordpack/second_stage.hpp"

#include <zlib.h>

#include <string>

#include "wordpack/errors.hpp"

namespace wordpack {

namespace {

// windowBits of -15 selects a raw RFC 1951 stream.
constexpr int kRawWindowBits = -15;

// zlib wants non-null buffer pointers even when the matching length is 0.
Bytef* nonnull_buffer(std::uint8_t* p) {
  static Bytef dummy;
  return p == nullptr ? &dummy : reinterpret_cast<Bytef*>(p);
}

Bytef* nonnull_buffer(const std::uint8_t* p) {
  return nonnull_buffer(const_cast<std::uint8_t*>(p));
}

class RawDeflateStage final : public SecondStage {
 public:
  std::vector<std::uint8_t> deflate(
      std::span<const std::uint8_t> data) const override {
    z_stream zs{};
    if (deflateInit2(&zs, Z_BEST_COMPRESSION, Z_DEFLATED, kRawWindowBits, 9,
                     Z_DEFAULT_STRATEGY) != Z_OK) {
      throw Error("deflate initialization failed");
    }
    std::vector<std::uint8_t> out(deflateBound(&zs, static_cast<uLong>(data.size())));
    zs.next_in = nonnull_buffer(data.data());
    zs.avail_in = static_cast<uInt>(data.size());
    zs.next_out = nonnull_buffer(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = ::deflate(&zs, Z_FINISH);
    const std::size_t produced = zs.total_out;
    deflateEnd(&zs);
    if (rc != Z_STREAM_END) {
      throw Error("deflate failed with zlib status " + std::to_string(rc));
    }
    out.resize(produced);
    return out;
  }

  std::vector<std::uint8_t> inflate(std::span<const std::uint8_t> data,
                                    std::size_t expected_size) const override {
    z_stream zs{};
    if (inflateInit2(&zs, kRawWindowBits) != Z_OK) {
      throw Error("inflate initialization failed");
    }
    std::vector<std::uint8_t> out(expected_size);
    zs.next_in = nonnull_buffer(data.data());
    zs.avail_in = static_cast<uInt>(data.size());
    zs.next_out = nonnull_buffer(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = ::inflate(&zs, Z_FINISH);
    const std::size_t produced = zs.total_out;
    const std::size_t consumed = zs.total_in;
    inflateEnd(&zs);
    if (rc != Z_STREAM_END) {
      throw CorruptionError("second-stage body is not a valid deflate stream");
    }
    if (produced != expected_size) {
      throw CorruptionError("second-stage body expands to " +
                            std::to_string(produced) + " bytes, expected " +
                            std::to_string(expected_size));
    }
    if (consumed != data.size()) {
      throw CorruptionError("trailing bytes after the deflate stream");
    }
    return out;
  }
};

}  // namespace

const SecondStage& raw_deflate_stage() {
  static const RawDeflateStage stage;
  return stage;
}

}  // namespace wordpack

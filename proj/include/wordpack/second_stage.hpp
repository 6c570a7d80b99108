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

namespace wordpack {

// Optional general-purpose stage applied to the reduced payload before it
// enters a container. Implementations must be deterministic and
// bytewise-lossless.
class SecondStage {
 public:
  virtual ~SecondStage() = default;

  virtual std::vector<std::uint8_t> deflate(
      std::span<const std::uint8_t> data) const = 0;

  // Expands `data` into exactly `expected_size` bytes. Throws
  // CorruptionError when the stream is damaged or the size disagrees.
  virtual std::vector<std::uint8_t> inflate(std::span<const std::uint8_t> data,
                                            std::size_t expected_size) const = 0;
};

// The default stage: a raw DEFLATE stream per RFC 1951, no zlib or gzip
// wrapper.
const SecondStage& raw_deflate_stage();

}  // namespace wordpack

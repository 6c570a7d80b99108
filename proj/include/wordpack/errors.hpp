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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordpack {

// Base class for all failures raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value does not fit the requested bit width, or the width itself is
// outside the supported range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Input ended in the middle of a structure (bit field, record, container
// body).
class TruncationError : public Error {
 public:
  using Error::Error;
};

// Bad magic, unsupported version, reserved flag bits, or a malformed
// layout.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Content-level damage: digest mismatch on a compiled dictionary, nonzero
// padding, unassigned codes, or an undecodable second-stage body.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

// The container was produced with a different dictionary than the one
// supplied for decompression.
class WrongDictionaryError : public Error {
 public:
  using Error::Error;
};

// Token or case structure violated: dangling case markers, case markers
// not followed by a word, or malformed token sequences.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Dictionary is full; no assignable codes remain below the reserved band.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A wordlist entry cannot become a dictionary word. Carries the 1-based
// line number of the offending entry.
class InvalidWordError : public Error {
 public:
  InvalidWordError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Filesystem-level failure (open, read, write).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wordpack

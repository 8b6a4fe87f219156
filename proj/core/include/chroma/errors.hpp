// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chroma {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad parameter values from a caller (CLI exit code 1).
class UsageError : public Error {
public:
  using Error::Error;
};

// Filesystem-level failures: missing files, short reads, failed writes
// (CLI exit code 2).
class IoError : public Error {
public:
  using Error::Error;
};

// Malformed or unsupported content (CLI exit code 3).
class FormatError : public Error {
public:
  using Error::Error;
};

// Format error tied to a byte position inside a file.
class ParseError : public FormatError {
public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : FormatError(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

private:
  std::size_t byte_offset_;
};

// Plane/image dimensions violate an operation's contract (CLI exit code 3).
class DimensionError : public FormatError {
public:
  using FormatError::FormatError;
};

}  // namespace chroma

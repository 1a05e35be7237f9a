#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace titlegen {

// Base class for every error raised by the library. The CLI maps
// ValidationError to exit code 1 and IoError to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: violated preconditions, malformed records, bad parameters.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

// A child process (parser, external scorer) misbehaved.
class ExternalError : public Error {
 public:
  using Error::Error;
};

class TimeoutError : public Error {
 public:
  using Error::Error;
};

// Malformed bracketed tree; carries the byte offset of the failure.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : ValidationError(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace titlegen

#pragma once

#include <stdexcept>
#include <string>

namespace gnssro {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the text parsers. Carries the 1-based line number of the
/// offending input so callers can point at the exact record.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace gnssro

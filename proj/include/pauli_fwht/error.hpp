#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pauli_fwht {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or buffer size is not 2^n x 2^n, or n is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A requested size exceeds a hard cap (oracle, verify, bench).
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data. Line and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Stream could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pauli_fwht

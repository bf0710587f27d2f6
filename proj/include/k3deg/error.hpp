#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace k3deg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : what + " (line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Face/edge data that does not describe a closed cell structure.
class StructureError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidMove : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace k3deg

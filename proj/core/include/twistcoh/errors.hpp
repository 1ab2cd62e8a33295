#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistcoh {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                              ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Operands live in different numeric modes, or a literal does not fit the active mode.
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// A character that does not kill every relator.
class InadmissibleCharacter : public Error {
 public:
  using Error::Error;
};

// Bad parameters: non-unimodular matrices, genus 0, length mismatches and the like.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// A cocycle or certificate failed an explicit consistency check.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace twistcoh

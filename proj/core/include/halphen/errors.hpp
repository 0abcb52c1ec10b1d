#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace halphen {

/// Base class for domain errors raised by the toolkit. Precondition
/// violations (bad indices, length mismatches) use the standard
/// std::invalid_argument / std::out_of_range instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Syntax or validation error in textual input. Positions are 1-based;
/// what() reads "source:line:column: message" (source omitted if empty).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message, const std::string& source = {})
      : Error((source.empty() ? "" : source + ":") + std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message),
        source_(source) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& source() const noexcept { return source_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::string source_;
};

class NotOnVariety : public Error {
 public:
  using Error::Error;
};

/// The gradient vanishes, so no tangent line is defined.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

/// The ideal contains a nonzero constant; its projective zero set is empty.
class EmptyProjectiveSet : public Error {
 public:
  using Error::Error;
};

class MalformedHilbertPolynomial : public Error {
 public:
  using Error::Error;
};

class GroebnerBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace halphen

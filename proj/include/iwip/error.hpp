#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iwip {

// Malformed or invalid user input (bad DSL, invalid graph, rank mismatch).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A text parse failure with a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An operation was called on a map that does not satisfy its hypotheses,
// e.g. a Whitehead graph requested for a map that is not a train track.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// A length or size cap was exceeded during a bounded computation.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagreed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace iwip

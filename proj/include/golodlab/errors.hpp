#pragma once

#include <stdexcept>
#include <string>

namespace golod {

/// Violated precondition on an operation's input (bad subset, index out of range, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed complex file or JSON document.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) +
                                          (column > 0 ? ", column " + std::to_string(column) : "") + ")"
                                    : what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// An identity that must hold exactly did not. Signals a bug, never bad input.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace golod

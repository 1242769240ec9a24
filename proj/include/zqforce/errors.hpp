#pragma once

#include <stdexcept>
#include <string>

namespace zq {

/// Malformed input text. `line()` is 1-based, or 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Structurally invalid graph or argument (self-loop, vertex out of range, bad family parameters).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is outside the class a solver handles (not a block graph, not a cactus,
/// disconnected, a formula branch that is not covered).
class ScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured size cap or memo limit would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zq

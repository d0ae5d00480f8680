#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace compnet {

// Invalid model or sweep parameters (infeasible edge budgets, bad n/S pairs).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// File header does not match the schema this build reads and writes.
class VersionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace compnet

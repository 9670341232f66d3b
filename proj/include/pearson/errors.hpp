#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pearson {

// Malformed codebook text. line is 1-based; 0 means "no specific line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " +
                                      message
                                : message),
        line_(line),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  // The message without the "line N:" prefix, for rewrapping.
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

// An enumeration or brute-force scan would visit more candidates than the
// configured budget allows.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A received vector with sigma = 0: the Pearson distance is undefined, so
// detection refuses to decide rather than picking arbitrarily.
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace pearson

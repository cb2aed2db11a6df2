#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromcoh {

// Malformed textual input. line() is 1-based; 0 when the format has no lines.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A computation was refused because it would exceed a configured budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Contraction of a loop has no meaning for this complex and is rejected.
class LoopContractionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace chromcoh

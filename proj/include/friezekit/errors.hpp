#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace friezekit {

/// Arithmetic or input-domain violation (division by zero, nonpositive
/// zig-zag value, degenerate width).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Row index outside 0..n+1.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A knitting step hit a forbidden divisor: N = -1 for the Y-rule,
/// N = 0 for the frieze rule.
class KnitBlocked : public std::runtime_error {
 public:
  KnitBlocked(const std::string& what, int row, long column)
      : std::runtime_error(what), row_(row), column_(column) {}

  /// Row of the entry that would have been knitted.
  int row() const noexcept { return row_; }
  long column() const noexcept { return column_; }

 private:
  int row_;
  long column_;
};

/// A result that a proven theorem rules out. Seeing one means a bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace friezekit

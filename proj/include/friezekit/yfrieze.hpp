#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "friezekit/grid.hpp"
#include "friezekit/rational.hpp"

namespace friezekit {

// ---------------------------------------------------------------------------
// Local rule: W*E = (1+N)*(1+S).

bool y_diamond_holds(const Rational& north, const Rational& west, const Rational& east,
                     const Rational& south);
inline bool y_diamond_holds(const Diamond& d) {
  return y_diamond_holds(d.north, d.west, d.east, d.south);
}

/// S = (W*E - N - 1) / (1 + N). Throws KnitBlocked (row and column -1) when
/// N = -1.
Rational y_knit_south(const Rational& north, const Rational& west, const Rational& east);

/// E = (1+N)(1+S) / W. Throws DomainError when W = 0.
Rational y_knit_east(const Rational& north, const Rational& west, const Rational& south);

/// W = (1+N)(1+S) / E. Throws DomainError when E = 0.
Rational y_knit_west(const Rational& north, const Rational& east, const Rational& south);

// ---------------------------------------------------------------------------

/// A closed Y-frieze pattern of width n: rows 0 and n+1 are zero and every
/// diamond obeys the Y-rule. The row of -1s below row n+1 is implied.
class YFrieze {
 public:
  /// Validates the grid; throws DomainError naming the first defect.
  explicit YFrieze(PatternGrid grid);

  int width() const noexcept { return grid_.width(); }
  const PatternGrid& grid() const noexcept { return grid_; }
  const Rational& get(long i, long j) const { return grid_.get(i, j); }
  const Rational& at(int r, long k) const { return grid_.at(r, k); }
  /// South-east diagonal through `column`, rows 1..n.
  std::vector<Rational> diagonal(long column = 0) const { return grid_.diagonal(column); }

  /// All interior entries are positive integers.
  bool is_arithmetic() const;
  /// Largest interior entry.
  Rational max_entry() const;

  friend bool operator==(const YFrieze&, const YFrieze&) = default;

 private:
  PatternGrid grid_;
};

// ---------------------------------------------------------------------------
// Vertical knitting

/// Rows knitted so far from a cyclic first row; rows[0] is the zero row and
/// every row has the input period.
struct OpenStrip {
  std::vector<std::vector<Rational>> rows;

  int period() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
  friend bool operator==(const OpenStrip&, const OpenStrip&) = default;
};

/// Knitting stopped because a source row held -1 above the entry at
/// (row, column).
struct BlockedKnit {
  int row;
  long column;
  OpenStrip strip;
};

using VerticalKnit = std::variant<YFrieze, OpenStrip, BlockedKnit>;

/// Places a zero row above `first_row` (one period of a cyclic row) and
/// knits rows 2, 3, ... up to `max_rows`. As soon as a knitted row is
/// identically zero the pattern is closed; the row after it is knitted as
/// a check that it is identically -1 wherever it is forced. A first row of
/// zeros (width 0) throws DomainError.
VerticalKnit y_knit_vertical(std::span<const Rational> first_row, int max_rows);

// ---------------------------------------------------------------------------
// Horizontal knitting

enum class Step { south_west, south_east };

/// One value per row 1..n on a path where each value is diagonally below
/// the previous one. `start_column` is the column of the row-1 value.
struct ZigZag {
  std::vector<Rational> values;
  std::vector<Step> directions;
  long start_column = 0;

  int width() const { return static_cast<int>(values.size()); }
  /// Column of the value in row r (1-based).
  long column_of(int r) const;

  /// The south-east diagonal through `start_column`.
  static ZigZag diagonal(std::vector<Rational> values, long start_column = 0);

  friend bool operator==(const ZigZag&, const ZigZag&) = default;
};

/// The unique closed Y-frieze of width n through the zig-zag. Values must be
/// strictly positive (DomainError otherwise).
YFrieze y_knit_horizontal(const ZigZag& zigzag);

/// Values of `frieze` along the zig-zag with the given shape.
ZigZag read_zigzag(const YFrieze& frieze, std::span<const Step> directions,
                   long start_column = 0);

// ---------------------------------------------------------------------------
// Verification

struct DiamondViolation {
  int row;       ///< row of the west corner
  long column;   ///< column of the west corner
  Diamond diamond;
};

struct YVerifyReport {
  std::vector<DiamondViolation> violations;
  bool top_row_zero = false;
  bool bottom_row_zero = false;
  /// Columns where row n holds -1, so the row below the closing zeros is not
  /// forced to be -1 there. Empty for patterns reachable by knitting.
  std::vector<long> unforced_minus_one_columns;
  /// Index of the first identically zero row after row 0, minus one.
  std::optional<int> detected_width;

  bool valid() const;
};

/// Checks every diamond and the boundary rows. Never divides, so patterns
/// containing -1 entries are fine.
YVerifyReport verify_yfrieze(const PatternGrid& grid);

/// b(i,j) == b(j, i+n+3) everywhere in the fundamental domain.
bool check_glide_symmetry(const PatternGrid& grid);
inline bool check_glide_symmetry(const YFrieze& f) { return check_glide_symmetry(f.grid()); }

}  // namespace friezekit

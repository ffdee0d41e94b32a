#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "friezekit/rational.hpp"

namespace friezekit {

/// Which local rule a grid is meant to satisfy.
enum class PatternKind { yfrieze, frieze };

std::string_view to_string(PatternKind kind);

/// The four entries of one diamond.
struct Diamond {
  Rational north;
  Rational west;
  Rational east;
  Rational south;
};

/// Staggered grid of a closed pattern of width n: rows 0..n+1, each a cyclic
/// row of period n+3.
///
/// Coordinates. Entry b(i,j) of a pattern lives in row r = j - i - 1 and
/// column k = (i - origin) mod (n+3). Drawn as in the usual figures, entry
/// (r,k) sits at horizontal position x = 2k + r, so even rows occupy even
/// positions and odd rows odd positions. The diamond whose west corner is
/// (r,k) is
///
///            N = (r-1, k+1)
///   W = (r, k)            E = (r, k+1)
///            S = (r+1, k)
///
/// and moving south-east keeps k while moving south-west decrements it.
///
/// Grids are immutable once built.
class PatternGrid {
 public:
  using Row = std::vector<Rational>;

  /// Requires width >= 1, rows.size() == width + 2 and every row of length
  /// width + 3; throws DomainError otherwise.
  PatternGrid(int width, std::vector<Row> rows, long origin = 0);

  int width() const noexcept { return width_; }
  int period() const noexcept { return width_ + 3; }
  int row_count() const noexcept { return width_ + 2; }
  long origin() const noexcept { return origin_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const Row& row(int r) const;

  /// Entry in row r, column k reduced mod n+3. Throws IndexError unless
  /// 0 <= r <= n+1.
  const Rational& at(int r, long k) const;

  /// Entry b(i,j). Throws IndexError unless 0 <= j - i - 1 <= n+1.
  const Rational& get(long i, long j) const;

  /// (i,j) -> (r, k) with k in [0, n+3).
  std::pair<int, long> to_row_column(long i, long j) const;
  /// (r, k) -> (i, j), using the representative k itself (not reduced).
  std::pair<long, long> to_paper(int r, long k) const;

  /// Diamond whose west corner is (r, k); r must be in 1..n so that all four
  /// corners are stored rows.
  Diamond diamond_at(int r, long k) const;

  /// True if every entry of row r equals `value`.
  bool row_is_constant(int r, const Rational& value) const;

  /// Copy with one entry replaced.
  PatternGrid with_entry(int r, long k, Rational value) const;

  /// Entries in row r along the diagonal through column `column` moving
  /// south-east, for rows 1..n.
  std::vector<Rational> diagonal(long column = 0) const;

  friend bool operator==(const PatternGrid&, const PatternGrid&) = default;

 private:
  long reduce(long k) const;

  int width_;
  std::vector<Row> rows_;
  long origin_;
};

/// Floor modulo with a nonnegative result for positive `m`.
inline long cyclic_index(long k, long m) {
  const long r = k % m;
  return r < 0 ? r + m : r;
}

}  // namespace friezekit

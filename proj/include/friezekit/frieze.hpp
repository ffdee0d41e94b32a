#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "friezekit/grid.hpp"
#include "friezekit/rational.hpp"

namespace friezekit {

/// Coxeter's rule: W*E = 1 + N*S.
bool frieze_diamond_holds(const Rational& north, const Rational& west, const Rational& east,
                          const Rational& south);
inline bool frieze_diamond_holds(const Diamond& d) {
  return frieze_diamond_holds(d.north, d.west, d.east, d.south);
}

/// S = (W*E - 1) / N. Throws KnitBlocked when N = 0.
Rational frieze_knit_south(const Rational& north, const Rational& west, const Rational& east);

/// A closed frieze pattern of width n: rows 0 and n+1 are all 1 and every
/// diamond obeys Coxeter's rule. The zero row below row n+1 is implied.
class Frieze {
 public:
  /// Validates the grid; throws DomainError naming the first defect.
  explicit Frieze(PatternGrid grid);

  int width() const noexcept { return grid_.width(); }
  const PatternGrid& grid() const noexcept { return grid_; }
  const Rational& at(int r, long k) const { return grid_.at(r, k); }
  const Rational& get(long i, long j) const { return grid_.get(i, j); }

  /// Row 1, one period.
  const PatternGrid::Row& quiddity() const { return grid_.row(1); }
  /// Row 2, the entries a(i, i+3). For width 1 this is the closing row of 1s.
  const PatternGrid::Row& second_row() const { return grid_.row(2); }

  bool is_arithmetic() const;

  friend bool operator==(const Frieze&, const Frieze&) = default;

 private:
  PatternGrid grid_;
};

/// Knits down from a row of 1s and one period of the quiddity row until a
/// row of 1s appears (the row after it is then 0). Throws KnitBlocked on a
/// zero divisor, DomainError for an all-ones quiddity (width 0) or when no
/// closure occurs within `max_rows` rows.
Frieze frieze_knit_vertical(std::span<const Rational> quiddity, int max_rows = 64);

/// Triangulation of a convex polygon with vertices 0..m-1.
struct Triangulation {
  int polygon_size = 3;
  /// Each pair (a, b) has a < b; sorted.
  std::vector<std::pair<int, int>> diagonals;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// All triangulations of the labelled m-gon (C_{m-2} of them), built by
/// choosing the apex of the triangle on edge (0,1) and recursing on the two
/// sub-polygons. Deterministic order. Requires m >= 3.
std::vector<Triangulation> enumerate_triangulations(int m);

/// Number of triangles at each vertex.
std::vector<std::int64_t> quiddity(const Triangulation& t);

/// C_k = binom(2k, k) / (k + 1).
std::uint64_t catalan(int k);

inline constexpr int kDefaultMaxFriezeWidth = 10;

/// Every arithmetic frieze of width n, one per triangulation of the
/// (n+3)-gon, in triangulation order. Requires 1 <= n <= max_width.
std::vector<Frieze> enumerate_friezes(int n, int max_width = kDefaultMaxFriezeWidth);

}  // namespace friezekit

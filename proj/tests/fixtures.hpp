#pragma once

// Patterns transcribed from the standard worked examples, in this
// library's coordinates: row r of each list starts at column 0.

#include <initializer_list>
#include <vector>

#include "friezekit/grid.hpp"
#include "friezekit/yfrieze.hpp"

namespace friezekit::fixtures {

inline std::vector<Rational> row_of(std::initializer_list<long> xs) {
  return std::vector<Rational>(xs.begin(), xs.end());
}

inline PatternGrid grid_of(int width, std::initializer_list<std::initializer_list<long>> rows,
                           long boundary) {
  std::vector<PatternGrid::Row> out;
  out.emplace_back(static_cast<std::size_t>(width + 3), Rational{boundary});
  for (const auto& r : rows) out.push_back(row_of(r));
  out.emplace_back(static_cast<std::size_t>(width + 3), Rational{boundary});
  return PatternGrid(width, std::move(out));
}

/// Arithmetic width-5 pattern with diagonal (1,2,3,4,5).
inline PatternGrid width5_arithmetic() {
  return grid_of(5,
                 {{1, 3, 3, 3, 3, 1, 5, 5},
                  {2, 8, 8, 8, 2, 4, 24, 4},
                  {3, 15, 15, 3, 3, 15, 15, 3},
                  {4, 24, 4, 2, 8, 8, 8, 2},
                  {5, 5, 1, 3, 3, 3, 3, 1}},
                 0);
}

/// Width-4 pattern containing -1 entries (and zeros in interior rows).
inline PatternGrid width4_with_minus_ones() {
  return grid_of(4,
                 {{1, 1, 3, -3, 0, 1, -5},
                  {0, 2, -10, -1, -1, -6, -6},
                  {-1, -6, -6, 0, 2, -10, -1},
                  {1, -5, 1, 1, 3, -3, 0}},
                 0);
}

/// Closed pattern knitted from the first row (1, 2, 5) of period 3.
inline PatternGrid width3_from_125() {
  return grid_of(3, {{1, 2, 5, 1, 2, 5}, {1, 9, 4, 1, 9, 4}, {2, 5, 1, 2, 5, 1}}, 0);
}

/// Width-4 arithmetic frieze with quiddity (2,1,4,1,3,1,3).
inline std::vector<Rational> width4_frieze_quiddity() { return row_of({2, 1, 4, 1, 3, 1, 3}); }

/// The displayed window (columns 0..4) of that frieze, rows 1..4.
inline std::vector<std::vector<Rational>> width4_frieze_window() {
  return {row_of({2, 1, 4, 1, 3}), row_of({1, 3, 3, 2, 2}), row_of({2, 2, 5, 1, 3}),
          row_of({1, 3, 2, 1, 4})};
}

/// Its image under p_4, columns 0..4 of rows 1..4.
inline std::vector<std::vector<Rational>> width4_pmap_window() {
  return {row_of({1, 3, 3, 2, 2}), row_of({2, 8, 5, 3, 3}), row_of({3, 9, 4, 2, 8}),
          row_of({2, 5, 1, 3, 3})};
}

/// Width-5 zig-zag 2,3,8,3,4 with steps SW, SE, SE, SW from column 0.
inline ZigZag width5_zigzag() {
  return ZigZag{row_of({2, 3, 8, 3, 4}),
                {Step::south_west, Step::south_east, Step::south_east, Step::south_west},
                0};
}

}  // namespace friezekit::fixtures

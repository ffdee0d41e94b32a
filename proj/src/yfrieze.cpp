#include "friezekit/yfrieze.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "friezekit/errors.hpp"

namespace friezekit {

namespace {

const Rational kZero{0};
const Rational kOne{1};
const Rational kMinusOne{-1};

std::string describe(const DiamondViolation& v) {
  return "Y-rule fails at row " + std::to_string(v.row) + ", column " + std::to_string(v.column) +
         ": W*E = " + (v.diamond.west * v.diamond.east).str() +
         ", (1+N)(1+S) = " + ((kOne + v.diamond.north) * (kOne + v.diamond.south)).str();
}

}  // namespace

bool y_diamond_holds(const Rational& north, const Rational& west, const Rational& east,
                     const Rational& south) {
  return west * east == (kOne + north) * (kOne + south);
}

Rational y_knit_south(const Rational& north, const Rational& west, const Rational& east) {
  if (north == kMinusOne) throw KnitBlocked("cannot knit below N = -1", -1, -1);
  return (west * east - north - kOne) / (kOne + north);
}

Rational y_knit_east(const Rational& north, const Rational& west, const Rational& south) {
  if (west.is_zero()) throw DomainError("cannot knit east of W = 0");
  return (kOne + north) * (kOne + south) / west;
}

Rational y_knit_west(const Rational& north, const Rational& east, const Rational& south) {
  if (east.is_zero()) throw DomainError("cannot knit west of E = 0");
  return (kOne + north) * (kOne + south) / east;
}

// ---------------------------------------------------------------------------

YFrieze::YFrieze(PatternGrid grid) : grid_(std::move(grid)) {
  const YVerifyReport report = verify_yfrieze(grid_);
  if (!report.top_row_zero) throw DomainError("row 0 of a Y-frieze must be identically 0");
  if (!report.bottom_row_zero) {
    throw DomainError("row " + std::to_string(grid_.width() + 1) +
                      " of a Y-frieze must be identically 0");
  }
  if (!report.violations.empty()) throw DomainError(describe(report.violations.front()));
  if (report.detected_width != grid_.width()) {
    throw DomainError("an interior row is identically 0; the pattern closes before row " +
                      std::to_string(grid_.width() + 1));
  }
}

bool YFrieze::is_arithmetic() const {
  for (int r = 1; r <= width(); ++r) {
    for (const auto& x : grid_.row(r)) {
      if (!x.is_integer() || x.sign() <= 0) return false;
    }
  }
  return true;
}

Rational YFrieze::max_entry() const {
  Rational best = grid_.at(1, 0);
  for (int r = 1; r <= width(); ++r) {
    for (const auto& x : grid_.row(r)) best = std::max(best, x);
  }
  return best;
}

// ---------------------------------------------------------------------------

VerticalKnit y_knit_vertical(std::span<const Rational> first_row, int max_rows) {
  if (first_row.empty()) throw DomainError("first row needs a period of at least 1");
  if (max_rows < 1) throw DomainError("max_rows must be at least 1");
  const auto p = static_cast<long>(first_row.size());
  auto row_is = [](const std::vector<Rational>& row, const Rational& v) {
    return std::all_of(row.begin(), row.end(), [&](const Rational& x) { return x == v; });
  };

  OpenStrip strip;
  strip.rows.emplace_back(static_cast<std::size_t>(p), kZero);
  strip.rows.emplace_back(first_row.begin(), first_row.end());
  if (row_is(strip.rows[1], kZero)) {
    throw DomainError("first row is identically 0: a width-0 pattern is degenerate");
  }

  // Knits row r+1 from rows r-1 (north) and r (west/east).
  auto knit_next = [&](int r) -> std::optional<BlockedKnit> {
    const auto& above = strip.rows[static_cast<std::size_t>(r - 1)];
    const auto& source = strip.rows[static_cast<std::size_t>(r)];
    std::vector<Rational> next;
    next.reserve(static_cast<std::size_t>(p));
    for (long k = 0; k < p; ++k) {
      const Rational& north = above[static_cast<std::size_t>(cyclic_index(k + 1, p))];
      if (north == kMinusOne) return BlockedKnit{r + 1, k, strip};
      next.push_back(y_knit_south(north, source[static_cast<std::size_t>(k)],
                                  source[static_cast<std::size_t>(cyclic_index(k + 1, p))]));
    }
    strip.rows.push_back(std::move(next));
    return std::nullopt;
  };

  for (int r = 1; r < max_rows; ++r) {
    if (auto blocked = knit_next(r)) return *std::move(blocked);
    if (!row_is(strip.rows.back(), kZero)) continue;

    const int width = r;  // row r+1 is the closing zero row
    // The row below the zeros is S = (0 - N - 1)/(1 + N) = -1 wherever the
    // entry of row n above it is not -1.
    const auto& row_n = strip.rows[static_cast<std::size_t>(width)];
    for (long k = 0; k < p; ++k) {
      const Rational& north = row_n[static_cast<std::size_t>(cyclic_index(k + 1, p))];
      if (north == kMinusOne) continue;
      if (y_knit_south(north, kZero, kZero) != kMinusOne) {
        throw TheoremViolation("row after the closing zeros is not -1 at column " +
                               std::to_string(k));
      }
    }

    const int period = width + 3;
    std::vector<PatternGrid::Row> rows;
    rows.reserve(static_cast<std::size_t>(width + 2));
    for (int rr = 0; rr <= width + 1; ++rr) {
      PatternGrid::Row row;
      row.reserve(static_cast<std::size_t>(period));
      for (long k = 0; k < period; ++k) {
        row.push_back(strip.rows[static_cast<std::size_t>(rr)][static_cast<std::size_t>(k % p)]);
      }
      rows.push_back(std::move(row));
    }
    try {
      return YFrieze(PatternGrid(width, std::move(rows)));
    } catch (const DomainError& e) {
      // Closed patterns are (n+3)-periodic; an input period incompatible
      // with that would surface here.
      throw TheoremViolation(std::string("closed pattern is not (n+3)-periodic: ") + e.what());
    }
  }
  return strip;
}

// ---------------------------------------------------------------------------

long ZigZag::column_of(int r) const {
  long k = start_column;
  for (int s = 1; s < r; ++s) {
    if (directions.at(static_cast<std::size_t>(s - 1)) == Step::south_west) --k;
  }
  return k;
}

ZigZag ZigZag::diagonal(std::vector<Rational> values, long start_column) {
  ZigZag z;
  z.directions.assign(values.empty() ? 0 : values.size() - 1, Step::south_east);
  z.values = std::move(values);
  z.start_column = start_column;
  return z;
}

YFrieze y_knit_horizontal(const ZigZag& zigzag) {
  const int n = zigzag.width();
  if (n < 1) throw DomainError("zig-zag must have at least one value");
  if (zigzag.directions.size() != static_cast<std::size_t>(n - 1)) {
    throw DomainError("a zig-zag of width " + std::to_string(n) + " needs " +
                      std::to_string(n - 1) + " directions");
  }
  for (const auto& v : zigzag.values) {
    if (v.sign() <= 0) throw DomainError("zig-zag values must be positive, got " + v.str());
  }
  const long period = n + 3;

  // Per interior row: column -> value, plus the column of its eastmost entry.
  std::vector<std::map<long, Rational>> known(static_cast<std::size_t>(n + 2));
  std::vector<long> start(static_cast<std::size_t>(n + 2), 0);
  std::vector<long> front(static_cast<std::size_t>(n + 2), 0);
  for (int r = 1; r <= n; ++r) {
    const long k = zigzag.column_of(r);
    start[static_cast<std::size_t>(r)] = front[static_cast<std::size_t>(r)] = k;
    known[static_cast<std::size_t>(r)].emplace(k, zigzag.values[static_cast<std::size_t>(r - 1)]);
  }
  auto value = [&](int r, long k) -> const Rational& {
    if (r == 0 || r == n + 1) return kZero;
    return known[static_cast<std::size_t>(r)].at(k);
  };
  // Staggered horizontal position of a row's eastmost entry.
  auto position = [&](int r) { return 2 * front[static_cast<std::size_t>(r)] + r; };

  // Advancing the westernmost front is always possible: its north and south
  // neighbours are then one step east of it. Stop once every row has gone
  // one full period past its start, so the last entry of each row can be
  // compared with the first.
  auto done = [&] {
    for (int r = 1; r <= n; ++r) {
      if (front[static_cast<std::size_t>(r)] < start[static_cast<std::size_t>(r)] + period) {
        return false;
      }
    }
    return true;
  };
  while (!done()) {
    int r = 1;
    for (int s = 2; s <= n; ++s) {
      if (position(s) < position(r)) r = s;
    }
    const long k = front[static_cast<std::size_t>(r)];
    Rational east = y_knit_east(value(r - 1, k + 1), value(r, k), value(r + 1, k));
    const long wrapped = k + 1 - period;
    if (wrapped >= start[static_cast<std::size_t>(r)] && value(r, wrapped) != east) {
      throw TheoremViolation("horizontal knitting is not (n+3)-periodic in row " +
                             std::to_string(r));
    }
    known[static_cast<std::size_t>(r)].emplace(k + 1, std::move(east));
    ++front[static_cast<std::size_t>(r)];
  }

  std::vector<PatternGrid::Row> rows;
  rows.reserve(static_cast<std::size_t>(n + 2));
  rows.emplace_back(static_cast<std::size_t>(period), kZero);
  for (int r = 1; r <= n; ++r) {
    PatternGrid::Row row(static_cast<std::size_t>(period));
    for (long k = start[static_cast<std::size_t>(r)];
         k < start[static_cast<std::size_t>(r)] + period; ++k) {
      row[static_cast<std::size_t>(cyclic_index(k, period))] = value(r, k);
    }
    rows.push_back(std::move(row));
  }
  rows.emplace_back(static_cast<std::size_t>(period), kZero);
  return YFrieze(PatternGrid(n, std::move(rows)));
}

ZigZag read_zigzag(const YFrieze& frieze, std::span<const Step> directions, long start_column) {
  const int n = frieze.width();
  if (directions.size() != static_cast<std::size_t>(n - 1)) {
    throw DomainError("a zig-zag of width " + std::to_string(n) + " needs " +
                      std::to_string(n - 1) + " directions");
  }
  ZigZag z;
  z.directions.assign(directions.begin(), directions.end());
  z.start_column = start_column;
  z.values.reserve(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) z.values.push_back(frieze.at(r, z.column_of(r)));
  return z;
}

// ---------------------------------------------------------------------------

bool YVerifyReport::valid() const {
  return violations.empty() && top_row_zero && bottom_row_zero && detected_width.has_value();
}

YVerifyReport verify_yfrieze(const PatternGrid& grid) {
  YVerifyReport report;
  const int n = grid.width();
  report.top_row_zero = grid.row_is_constant(0, kZero);
  report.bottom_row_zero = grid.row_is_constant(n + 1, kZero);
  for (int r = 1; r <= n; ++r) {
    for (long k = 0; k < grid.period(); ++k) {
      Diamond d = grid.diamond_at(r, k);
      if (!y_diamond_holds(d)) report.violations.push_back({r, k, std::move(d)});
    }
  }
  // Diamonds straddling the closing zero row: W = E = 0 and S is the implied
  // row. The rule reads 0 = (1+N)(1+S), which forces S = -1 unless N = -1.
  for (long k = 0; k < grid.period(); ++k) {
    if (grid.at(n, k + 1) == kMinusOne) report.unforced_minus_one_columns.push_back(k);
  }
  if (report.top_row_zero) {
    for (int r = 1; r <= n + 1; ++r) {
      if (grid.row_is_constant(r, kZero)) {
        report.detected_width = r - 1;
        break;
      }
    }
    if (report.detected_width == 0) report.detected_width.reset();
  }
  return report;
}

bool check_glide_symmetry(const PatternGrid& grid) {
  const long shift = grid.width() + 3;
  for (int r = 0; r <= grid.width() + 1; ++r) {
    for (long k = 0; k < grid.period(); ++k) {
      const auto [i, j] = grid.to_paper(r, k);
      if (grid.get(i, j) != grid.get(j, i + shift)) return false;
    }
  }
  return true;
}

}  // namespace friezekit

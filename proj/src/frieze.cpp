#include "friezekit/frieze.hpp"

#include <algorithm>
#include <string>

#include "friezekit/errors.hpp"

namespace friezekit {

namespace {

const Rational kZero{0};
const Rational kOne{1};

// Triangulations of the sub-polygon with vertices vs (in cyclic order), as
// lists of diagonals. Sides of the sub-polygon that are not sides of the
// full polygon have already been recorded by the caller.
std::vector<std::vector<std::pair<int, int>>> triangulate(const std::vector<int>& vs) {
  if (vs.size() < 3) return {{}};
  std::vector<std::vector<std::pair<int, int>>> out;
  const int a = vs.front();
  const int b = vs.back();
  // The triangle on edge (a, b) has apex vs[t] for some interior t.
  for (std::size_t t = 1; t + 1 < vs.size(); ++t) {
    const std::vector<int> left(vs.begin(), vs.begin() + static_cast<long>(t) + 1);
    const std::vector<int> right(vs.begin() + static_cast<long>(t), vs.end());
    const auto lefts = triangulate(left);
    const auto rights = triangulate(right);
    for (const auto& l : lefts) {
      for (const auto& r : rights) {
        std::vector<std::pair<int, int>> d = l;
        d.insert(d.end(), r.begin(), r.end());
        if (left.size() >= 3) d.emplace_back(std::minmax(a, vs[t]));
        if (right.size() >= 3) d.emplace_back(std::minmax(vs[t], b));
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

}  // namespace

bool frieze_diamond_holds(const Rational& north, const Rational& west, const Rational& east,
                          const Rational& south) {
  return west * east == kOne + north * south;
}

Rational frieze_knit_south(const Rational& north, const Rational& west, const Rational& east) {
  if (north.is_zero()) throw KnitBlocked("cannot knit below N = 0", -1, -1);
  return (west * east - kOne) / north;
}

Frieze::Frieze(PatternGrid grid) : grid_(std::move(grid)) {
  const int n = grid_.width();
  if (!grid_.row_is_constant(0, kOne)) throw DomainError("row 0 of a frieze must be all 1");
  if (!grid_.row_is_constant(n + 1, kOne)) {
    throw DomainError("row " + std::to_string(n + 1) + " of a frieze must be all 1");
  }
  for (int r = 1; r <= n; ++r) {
    if (grid_.row_is_constant(r, kOne)) {
      throw DomainError("row " + std::to_string(r) + " is all 1; the frieze closes early");
    }
    for (long k = 0; k < grid_.period(); ++k) {
      if (!frieze_diamond_holds(grid_.diamond_at(r, k))) {
        throw DomainError("diamond rule fails at row " + std::to_string(r) + ", column " +
                          std::to_string(k));
      }
    }
  }
}

bool Frieze::is_arithmetic() const {
  for (int r = 1; r <= width(); ++r) {
    for (const auto& x : grid_.row(r)) {
      if (!x.is_integer() || x.sign() <= 0) return false;
    }
  }
  return true;
}

Frieze frieze_knit_vertical(std::span<const Rational> quiddity, int max_rows) {
  if (quiddity.empty()) throw DomainError("quiddity needs a period of at least 1");
  const auto p = static_cast<long>(quiddity.size());
  auto all_equal = [](const std::vector<Rational>& row, const Rational& v) {
    return std::all_of(row.begin(), row.end(), [&](const Rational& x) { return x == v; });
  };

  std::vector<std::vector<Rational>> rows;
  rows.emplace_back(static_cast<std::size_t>(p), kOne);
  rows.emplace_back(quiddity.begin(), quiddity.end());
  if (all_equal(rows[1], kOne)) {
    throw DomainError("quiddity is all 1: a width-0 frieze is degenerate");
  }

  for (int r = 1; r < max_rows; ++r) {
    const auto& above = rows[static_cast<std::size_t>(r - 1)];
    const auto& source = rows[static_cast<std::size_t>(r)];
    std::vector<Rational> next;
    next.reserve(static_cast<std::size_t>(p));
    for (long k = 0; k < p; ++k) {
      const long east = (k + 1) % p;
      const Rational& north = above[static_cast<std::size_t>(east)];
      if (north.is_zero()) {
        throw KnitBlocked("zero entry in row " + std::to_string(r - 1) + " blocks frieze knitting",
                          r + 1, k);
      }
      next.push_back(frieze_knit_south(north, source[static_cast<std::size_t>(k)],
                                       source[static_cast<std::size_t>(east)]));
    }
    rows.push_back(std::move(next));
    if (!all_equal(rows.back(), kOne)) continue;

    // A row of 1s is followed by (1*1 - 1)/N = 0 wherever N != 0.
    const int width = r;
    const int period = width + 3;
    std::vector<PatternGrid::Row> grid_rows;
    grid_rows.reserve(static_cast<std::size_t>(width + 2));
    for (int rr = 0; rr <= width + 1; ++rr) {
      PatternGrid::Row row;
      row.reserve(static_cast<std::size_t>(period));
      for (long k = 0; k < period; ++k) {
        row.push_back(rows[static_cast<std::size_t>(rr)][static_cast<std::size_t>(k % p)]);
      }
      grid_rows.push_back(std::move(row));
    }
    try {
      return Frieze(PatternGrid(width, std::move(grid_rows)));
    } catch (const DomainError& e) {
      throw TheoremViolation(std::string("closed frieze is not (n+3)-periodic: ") + e.what());
    }
  }
  throw DomainError("frieze did not close within " + std::to_string(max_rows) + " rows");
}

std::vector<Triangulation> enumerate_triangulations(int m) {
  if (m < 3) throw DomainError("a polygon needs at least 3 vertices");
  // Root edge is the side (0, m-1); listing vertices 0..m-1 puts it first/last.
  std::vector<int> vs(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) vs[static_cast<std::size_t>(v)] = v;
  std::vector<Triangulation> out;
  for (auto& d : triangulate(vs)) {
    std::sort(d.begin(), d.end());
    out.push_back(Triangulation{m, std::move(d)});
  }
  return out;
}

std::vector<std::int64_t> quiddity(const Triangulation& t) {
  // A vertex meeting d diagonals lies in d + 1 triangles.
  std::vector<std::int64_t> q(static_cast<std::size_t>(t.polygon_size), 1);
  for (const auto& [a, b] : t.diagonals) {
    ++q.at(static_cast<std::size_t>(a));
    ++q.at(static_cast<std::size_t>(b));
  }
  return q;
}

std::uint64_t catalan(int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * static_cast<std::uint64_t>(2 * i + 1) / static_cast<std::uint64_t>(i + 2);
  return c;
}

std::vector<Frieze> enumerate_friezes(int n, int max_width) {
  if (n < 1 || n > max_width) {
    throw DomainError("frieze width must lie in 1.." + std::to_string(max_width));
  }
  std::vector<Frieze> out;
  for (const auto& t : enumerate_triangulations(n + 3)) {
    const auto q = quiddity(t);
    std::vector<Rational> row(q.begin(), q.end());
    out.push_back(frieze_knit_vertical(row, n + 2));
  }
  return out;
}

}  // namespace friezekit

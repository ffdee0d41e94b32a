#include "friezekit/grid.hpp"

#include <algorithm>

#include "friezekit/errors.hpp"

namespace friezekit {

std::string_view to_string(PatternKind kind) {
  return kind == PatternKind::yfrieze ? "yfrieze" : "frieze";
}

PatternGrid::PatternGrid(int width, std::vector<Row> rows, long origin)
    : width_(width), rows_(std::move(rows)), origin_(origin) {
  if (width_ < 1) throw DomainError("pattern width must be at least 1");
  if (rows_.size() != static_cast<std::size_t>(width_ + 2)) {
    throw DomainError("width " + std::to_string(width_) + " needs " +
                      std::to_string(width_ + 2) + " rows, got " +
                      std::to_string(rows_.size()));
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != static_cast<std::size_t>(period())) {
      throw DomainError("row " + std::to_string(r) + " must have " +
                        std::to_string(period()) + " entries, got " +
                        std::to_string(rows_[r].size()));
    }
  }
}

long PatternGrid::reduce(long k) const { return cyclic_index(k, period()); }

const PatternGrid::Row& PatternGrid::row(int r) const {
  if (r < 0 || r > width_ + 1) {
    throw IndexError("row " + std::to_string(r) + " outside 0.." + std::to_string(width_ + 1));
  }
  return rows_[static_cast<std::size_t>(r)];
}

const Rational& PatternGrid::at(int r, long k) const {
  return row(r)[static_cast<std::size_t>(reduce(k))];
}

std::pair<int, long> PatternGrid::to_row_column(long i, long j) const {
  const long r = j - i - 1;
  if (r < 0 || r > width_ + 1) {
    throw IndexError("(i,j) = (" + std::to_string(i) + "," + std::to_string(j) +
                     ") lies in row " + std::to_string(r) + ", outside 0.." +
                     std::to_string(width_ + 1));
  }
  return {static_cast<int>(r), reduce(i - origin_)};
}

std::pair<long, long> PatternGrid::to_paper(int r, long k) const {
  const long i = k + origin_;
  return {i, i + r + 1};
}

const Rational& PatternGrid::get(long i, long j) const {
  const auto [r, k] = to_row_column(i, j);
  return at(r, k);
}

Diamond PatternGrid::diamond_at(int r, long k) const {
  if (r < 1 || r > width_) {
    throw IndexError("diamond west corner must lie in rows 1.." + std::to_string(width_));
  }
  return Diamond{at(r - 1, k + 1), at(r, k), at(r, k + 1), at(r + 1, k)};
}

bool PatternGrid::row_is_constant(int r, const Rational& value) const {
  const Row& entries = row(r);
  return std::all_of(entries.begin(), entries.end(),
                     [&](const Rational& x) { return x == value; });
}

PatternGrid PatternGrid::with_entry(int r, long k, Rational value) const {
  std::vector<Row> rows = rows_;
  rows.at(static_cast<std::size_t>(r))[static_cast<std::size_t>(reduce(k))] = std::move(value);
  return PatternGrid(width_, std::move(rows), origin_);
}

std::vector<Rational> PatternGrid::diagonal(long column) const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(width_));
  for (int r = 1; r <= width_; ++r) out.push_back(at(r, column));
  return out;
}

}  // namespace friezekit

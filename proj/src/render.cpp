#include "friezekit/render.hpp"

#include <algorithm>

#include "friezekit/errors.hpp"

namespace friezekit {

namespace {

std::string layout(const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 1;
  std::size_t positions = 0;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (const auto& c : cells[r]) width = std::max(width, c.size());
    if (!cells[r].empty()) positions = std::max(positions, r + 2 * cells[r].size() - 1);
  }
  std::string out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line;
    for (std::size_t x = 0; x < positions; ++x) {
      if (x > 0) line += ' ';
      const bool occupied = x >= r && (x - r) % 2 == 0 && (x - r) / 2 < cells[r].size();
      const std::string& text = occupied ? cells[r][(x - r) / 2] : std::string();
      line.append(width - text.size(), ' ');
      line += text;
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_ascii(const PatternGrid& grid, int columns) {
  if (columns < 0) throw DomainError("column count must be nonnegative");
  const int shown = columns == 0 ? grid.period() : columns;
  std::vector<std::vector<std::string>> cells;
  for (int r = 0; r < grid.row_count(); ++r) {
    std::vector<std::string> row;
    for (long k = 0; k < shown; ++k) row.push_back(grid.at(r, k).str());
    cells.push_back(std::move(row));
  }
  return layout(cells);
}

std::string render_ascii(const OpenStrip& strip, int columns) {
  if (columns < 0) throw DomainError("column count must be nonnegative");
  const int period = strip.period();
  const int shown = columns == 0 ? std::max(period, 4) : columns;
  std::vector<std::vector<std::string>> cells;
  for (const auto& src : strip.rows) {
    std::vector<std::string> row;
    for (int k = 0; k < shown; ++k) row.push_back(src[static_cast<std::size_t>(k % period)].str());
    cells.push_back(std::move(row));
  }
  return layout(cells);
}

}  // namespace friezekit

#pragma once

#include <string>

#include "friezekit/grid.hpp"
#include "friezekit/yfrieze.hpp"

namespace friezekit {

/// Staggered text layout in the style of the usual frieze drawings. Row r
/// starts r positions in; each position is a right-aligned cell as wide as
/// the widest entry, and neighbouring positions are separated by one space.
/// Trailing blanks are trimmed and every line ends in '\n', so output is
/// byte-stable for a given grid.
///
/// `columns` entries are drawn per row; 0 means one period.
std::string render_ascii(const PatternGrid& grid, int columns = 0);

/// Same layout for a vertically knitted strip; 0 means max(period, 4).
std::string render_ascii(const OpenStrip& strip, int columns = 0);

}  // namespace friezekit

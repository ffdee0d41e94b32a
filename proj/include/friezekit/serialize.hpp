#pragma once

#include <string>
#include <string_view>

#include "friezekit/grid.hpp"

namespace friezekit {

/// A grid together with the rule it claims to follow, as read from disk.
struct TaggedGrid {
  PatternKind kind;
  PatternGrid grid;

  friend bool operator==(const TaggedGrid&, const TaggedGrid&) = default;
};

/// Compact JSON:
///   {"kind":"yfrieze"|"frieze","width":n,"origin":o,"rows":[["p/q",...],...]}
/// with keys in that order and every scalar written in reduced form ("p"
/// when q = 1).
std::string serialize(const PatternGrid& grid, PatternKind kind);

/// Inverse of serialize. Any structural or scalar defect throws ParseError
/// carrying a byte offset into `text`.
TaggedGrid deserialize(std::string_view text);

}  // namespace friezekit

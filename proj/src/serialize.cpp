#include "friezekit/serialize.hpp"

#include <json.hpp>

#include "friezekit/errors.hpp"

namespace friezekit {

namespace {

using ordered_json = nlohmann::ordered_json;

// Byte offset of the first occurrence of `needle` in `text`, or 0. Good
// enough to point a user at the offending token.
std::size_t locate(std::string_view text, std::string_view needle) {
  const auto pos = text.find(needle);
  return pos == std::string_view::npos ? 0 : pos;
}

}  // namespace

std::string serialize(const PatternGrid& grid, PatternKind kind) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : grid.rows()) {
    ordered_json out = ordered_json::array();
    for (const auto& x : row) out.push_back(x.str());
    rows.push_back(std::move(out));
  }
  ordered_json doc;
  doc["kind"] = std::string(to_string(kind));
  doc["width"] = grid.width();
  doc["origin"] = grid.origin();
  doc["rows"] = std::move(rows);
  return doc.dump();
}

TaggedGrid deserialize(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("top level must be an object", 0);

  auto require = [&](const char* key) -> const ordered_json& {
    if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"", 0);
    return doc[key];
  };

  const auto& kind_json = require("kind");
  PatternKind kind;
  if (kind_json == "yfrieze") {
    kind = PatternKind::yfrieze;
  } else if (kind_json == "frieze") {
    kind = PatternKind::frieze;
  } else {
    throw ParseError("\"kind\" must be \"yfrieze\" or \"frieze\"", locate(text, "\"kind\""));
  }

  const auto& width_json = require("width");
  if (!width_json.is_number_integer() || width_json.get<long>() < 1) {
    throw ParseError("\"width\" must be a positive integer", locate(text, "\"width\""));
  }
  const int width = width_json.get<int>();

  const auto& origin_json = require("origin");
  if (!origin_json.is_number_integer()) {
    throw ParseError("\"origin\" must be an integer", locate(text, "\"origin\""));
  }
  const long origin = origin_json.get<long>();

  const auto& rows_json = require("rows");
  const std::size_t rows_at = locate(text, "\"rows\"");
  if (!rows_json.is_array() || rows_json.size() != static_cast<std::size_t>(width + 2)) {
    throw ParseError("\"rows\" must hold width+2 = " + std::to_string(width + 2) + " rows",
                     rows_at);
  }
  std::vector<PatternGrid::Row> rows;
  rows.reserve(rows_json.size());
  for (std::size_t r = 0; r < rows_json.size(); ++r) {
    const auto& row_json = rows_json[r];
    if (!row_json.is_array() || row_json.size() != static_cast<std::size_t>(width + 3)) {
      throw ParseError("row " + std::to_string(r) + " must hold width+3 = " +
                           std::to_string(width + 3) + " entries",
                       rows_at);
    }
    PatternGrid::Row row;
    row.reserve(row_json.size());
    for (const auto& cell : row_json) {
      if (!cell.is_string()) {
        throw ParseError("row " + std::to_string(r) + ": scalars must be \"p/q\" strings",
                         rows_at);
      }
      const auto s = cell.get<std::string>();
      auto value = Rational::parse(s);
      if (!value) {
        throw ParseError("row " + std::to_string(r) + ": invalid scalar \"" + s + "\"",
                         locate(text, "\"" + s + "\""));
      }
      row.push_back(std::move(*value));
    }
    rows.push_back(std::move(row));
  }
  return TaggedGrid{kind, PatternGrid(width, std::move(rows), origin)};
}

}  // namespace friezekit

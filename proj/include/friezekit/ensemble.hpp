#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "friezekit/enumerate.hpp"
#include "friezekit/frieze.hpp"
#include "friezekit/yfrieze.hpp"

namespace friezekit {

/// The Y-frieze knitted from the second row a(i, i+3) of an arithmetic
/// frieze, aligned so that b(i, i+2) = a(i, i+3). Throws TheoremViolation if
/// knitting blocks, closes at a different width, or leaves the positive
/// integers.
YFrieze p_map(const Frieze& frieze);

/// Friezes sharing a second row (compared as cyclic rows, no rotation).
struct EquivalenceClass {
  std::vector<Rational> second_row;
  std::vector<Frieze> members;
};

/// Partitions friezes of one width by second row, in order of first
/// appearance. Class sizes are checked against the known bounds (exactly 1
/// for even width, at most 2 for odd width); a breach throws
/// TheoremViolation.
std::vector<EquivalenceClass> group_by_second_row(std::span<const Frieze> friezes);

struct SurjectivityReport {
  int width = 0;
  std::int64_t bound = 0;
  std::size_t image_size = 0;
  std::size_t enumerated_size = 0;
  /// Enumerated patterns outside the image: counterexamples to
  /// surjectivity, if any ever appear.
  std::vector<Diagonal> missing;
  /// Image patterns with an entry above the bound, so the search could not
  /// have found them.
  std::vector<Diagonal> bound_escapes;
  std::size_t classes_size1 = 0;
  std::size_t classes_size2 = 0;

  bool conjecture_consistent() const { return missing.empty(); }
};

/// Compares the image of p_n over all arithmetic friezes of width n with
/// the bounded search for arithmetic Y-friezes. Throws TheoremViolation if
/// an image pattern within the bound is absent from the search result.
SurjectivityReport surjectivity_report(int width, std::int64_t bound, unsigned jobs = 1);

/// {"width":..,"bound":..,"image_size":..,"enumerated_size":..,"missing":[..],
///  "bound_escapes":[..],"classes":{"size1":..,"size2":..}}
std::string to_json(const SurjectivityReport& report);

}  // namespace friezekit

#pragma once

#include <cstdint>
#include <vector>

#include "friezekit/yfrieze.hpp"

namespace friezekit {

/// South-east diagonal (rows 1..n at column 0) of an arithmetic Y-frieze.
/// It determines the pattern.
using Diagonal = std::vector<std::int64_t>;

/// Largest bound the integer search accepts; keeps (1+N)(1+S) within int64.
inline constexpr std::int64_t kMaxSearchBound = 1'000'000'000;

struct SearchConfig {
  int width = 1;
  /// Largest entry allowed anywhere in the pattern.
  std::int64_t bound = 1000;
  /// Worker threads; 0 means one per hardware thread.
  unsigned jobs = 1;

  /// Throws DomainError unless width >= 1 and width <= bound <= kMaxSearchBound.
  void validate() const;
};

/// 1000 for width <= 4, 200 above.
std::int64_t default_bound(int width);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned_integrality = 0;
  std::uint64_t pruned_bound = 0;
};

/// Diagonals of every arithmetic Y-frieze of the given width whose entries
/// are all at most cfg.bound, sorted lexicographically. The answer is
/// complete relative to the bound and identical for any number of jobs.
///
/// Depth-first over diagonal prefixes (d_1..d_m). A prefix fixes every entry
/// (r, c) with r + c <= m by horizontal knitting, and each new entry is
/// rejected if it is not an integer or exceeds the bound (positivity is
/// automatic). The first new entry (1+N)(1+d_m)/d_{m-1} is integral only
/// for d_m in one residue class, so d_m is stepped through that class.
std::vector<Diagonal> enumerate_arithmetic_diagonals(const SearchConfig& cfg,
                                                     SearchStats* stats = nullptr);

/// Same search, returning the patterns themselves (each knitted and
/// checked with exact arithmetic).
std::vector<YFrieze> enumerate_arithmetic_yfriezes(const SearchConfig& cfg);

/// The pattern knitted from (1, 2, ..., n) on the column-0 diagonal. Throws
/// TheoremViolation if it is not arithmetic.
YFrieze unitary_pattern(int width);

}  // namespace friezekit

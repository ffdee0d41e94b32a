#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "friezekit/ensemble.hpp"
#include "friezekit/enumerate.hpp"
#include "friezekit/errors.hpp"

using namespace friezekit;

namespace {

// Knit every tuple in {1..bound}^n with exact arithmetic and keep the
// arithmetic patterns whose entries stay within the bound. No pruning.
std::vector<Diagonal> naive_search(int n, std::int64_t bound) {
  std::vector<Diagonal> out;
  Diagonal d(static_cast<std::size_t>(n), 1);
  const Rational limit{static_cast<long>(bound)};
  while (true) {
    std::vector<Rational> values(d.begin(), d.end());
    const YFrieze y = y_knit_horizontal(ZigZag::diagonal(values));
    if (y.is_arithmetic() && y.max_entry() <= limit) out.push_back(d);
    int i = n - 1;
    while (i >= 0 && d[static_cast<std::size_t>(i)] == bound) d[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++d[static_cast<std::size_t>(i)];
  }
  return out;
}

const std::vector<Diagonal> kWidthThreeTable = {{1, 1, 2}, {1, 2, 3}, {1, 4, 5}, {2, 1, 1},
                                                {2, 3, 2}, {2, 9, 5}, {3, 2, 1}, {3, 8, 3},
                                                {5, 4, 1}, {5, 9, 2}};

}  // namespace

TEST(SearchConfig, Validation) {
  EXPECT_THROW((SearchConfig{0, 10, 1}).validate(), DomainError);
  EXPECT_THROW((SearchConfig{5, 4, 1}).validate(), DomainError);
  EXPECT_THROW((SearchConfig{2, kMaxSearchBound + 1, 1}).validate(), DomainError);
  EXPECT_NO_THROW((SearchConfig{5, 5, 1}).validate());
  EXPECT_EQ(default_bound(4), 1000);
  EXPECT_EQ(default_bound(5), 200);
}

TEST(Enumerate, TableRows) {
  EXPECT_EQ(enumerate_arithmetic_diagonals({1, 100, 1}), (std::vector<Diagonal>{{1}}));
  EXPECT_EQ(enumerate_arithmetic_diagonals({2, 100, 1}),
            (std::vector<Diagonal>{{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}}));
  EXPECT_EQ(enumerate_arithmetic_diagonals({3, 1000, 1}), kWidthThreeTable);
  EXPECT_EQ(enumerate_arithmetic_diagonals({3, 25, 1}), kWidthThreeTable);
}

TEST(Enumerate, OnesAreRejectedByIntegrality) {
  SearchStats stats;
  const auto found = enumerate_arithmetic_diagonals({3, 30, 1}, &stats);
  EXPECT_EQ(std::count(found.begin(), found.end(), Diagonal{1, 1, 1}), 0);
  EXPECT_GT(stats.pruned_integrality, 0u);
  // The same tuple knitted exactly has a 7/2.
  const YFrieze y = y_knit_horizontal(ZigZag::diagonal(fixtures::row_of({1, 1, 1})));
  EXPECT_EQ(y.at(1, 2), Rational(mpz_class(7), mpz_class(2)));
}

TEST(Enumerate, MatchesNaiveOracle) {
  for (int n = 1; n <= 2; ++n) {
    for (std::int64_t bound : {2, 3, 5, 10, 17, 30}) {
      if (bound < n) continue;
      EXPECT_EQ(enumerate_arithmetic_diagonals({n, bound, 1}), naive_search(n, bound))
          << "n=" << n << " B=" << bound;
    }
  }
  EXPECT_EQ(enumerate_arithmetic_diagonals({3, 12, 1}), naive_search(3, 12));
}

TEST(Enumerate, SoundPatterns) {
  for (int n = 1; n <= 5; ++n) {
    const SearchConfig cfg{n, 200, 1};
    for (const auto& y : enumerate_arithmetic_yfriezes(cfg)) {
      EXPECT_EQ(y.width(), n);
      EXPECT_TRUE(y.is_arithmetic());
      EXPECT_LE(y.max_entry(), Rational(200));
      EXPECT_TRUE(verify_yfrieze(y.grid()).valid());
      EXPECT_TRUE(check_glide_symmetry(y));
    }
  }
}

TEST(Enumerate, MonotoneInBound) {
  for (int n = 1; n <= 4; ++n) {
    std::set<Diagonal> previous;
    for (std::int64_t bound : {10, 20, 50, 100, 300}) {
      const auto found = enumerate_arithmetic_diagonals({n, bound, 1});
      const std::set<Diagonal> current(found.begin(), found.end());
      EXPECT_TRUE(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
      previous = current;
    }
  }
}

TEST(Enumerate, DeterministicAcrossJobs) {
  for (int n = 1; n <= 5; ++n) {
    const auto serial = enumerate_arithmetic_diagonals({n, 300, 1});
    EXPECT_TRUE(std::is_sorted(serial.begin(), serial.end()));
    EXPECT_EQ(std::adjacent_find(serial.begin(), serial.end()), serial.end());
    for (unsigned jobs : {2u, 3u, 8u, 0u}) {
      EXPECT_EQ(enumerate_arithmetic_diagonals({n, 300, jobs}), serial) << "jobs=" << jobs;
    }
  }
}

TEST(Enumerate, ContainsImageOfPMap) {
  for (int n = 1; n <= 5; ++n) {
    const std::int64_t bound = 500;
    const auto found = enumerate_arithmetic_diagonals({n, bound, 1});
    const std::set<Diagonal> found_set(found.begin(), found.end());
    for (const auto& f : enumerate_friezes(n)) {
      const YFrieze y = p_map(f);
      if (y.max_entry() > Rational(bound)) continue;
      Diagonal d;
      for (const auto& x : y.diagonal()) d.push_back(*x.to_int64());
      EXPECT_TRUE(found_set.contains(d)) << "n=" << n;
    }
  }
}

TEST(UnitaryPattern, Examples) {
  EXPECT_EQ(unitary_pattern(1).diagonal(), fixtures::row_of({1}));
  const YFrieze three = unitary_pattern(3);
  EXPECT_TRUE(three.is_arithmetic());
  EXPECT_NE(std::find(kWidthThreeTable.begin(), kWidthThreeTable.end(), Diagonal{1, 2, 3}),
            kWidthThreeTable.end());
  EXPECT_EQ(unitary_pattern(5).grid(), fixtures::width5_arithmetic());
  for (int n = 1; n <= 12; ++n) EXPECT_TRUE(unitary_pattern(n).is_arithmetic()) << n;
  EXPECT_THROW(unitary_pattern(0), DomainError);
}

#include "friezekit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <numeric>
#include <string>
#include <thread>

#include "friezekit/errors.hpp"

namespace friezekit {

void SearchConfig::validate() const {
  if (width < 1) throw DomainError("search width must be at least 1");
  if (bound < width) {
    throw DomainError("bound " + std::to_string(bound) + " is below the width " +
                      std::to_string(width));
  }
  if (bound > kMaxSearchBound) {
    throw DomainError("bound may not exceed " + std::to_string(kMaxSearchBound));
  }
}

std::int64_t default_bound(int width) { return width <= 4 ? 1000 : 200; }

namespace {

// One worker's search state. Entries are positive and at most `bound`, so
// all products stay inside int64.
class DiagonalSearch {
 public:
  DiagonalSearch(int width, std::int64_t bound)
      : n_(width),
        bound_(bound),
        stride_(static_cast<std::size_t>(width + 4)),
        cells_(static_cast<std::size_t>(width + 2) * stride_, 0) {}

  // All hits whose first diagonal entry is d1, in lexicographic order.
  void run_branch(std::int64_t d1, std::vector<Diagonal>& out) {
    out_ = &out;
    cell(1, 0) = d1;
    ++stats.nodes;
    extend(2);
  }

  SearchStats stats;

 private:
  std::int64_t& cell(int r, int c) {
    return cells_[static_cast<std::size_t>(r) * stride_ + static_cast<std::size_t>(c)];
  }

  // Entry (r, c) from W = (r, c-1), N = (r-1, c), S = (r+1, c-1); rows 0 and
  // n+1 read as 0. Returns false when the entry is not an integer or exceeds
  // the bound.
  bool knit(int r, int c) {
    const std::int64_t north = cell(r - 1, c);
    const std::int64_t south = cell(r + 1, c - 1);
    const std::int64_t west = cell(r, c - 1);
    const std::int64_t num = (1 + north) * (1 + south);
    if (num % west != 0) {
      ++stats.pruned_integrality;
      return false;
    }
    const std::int64_t east = num / west;
    if (east > bound_) {
      ++stats.pruned_bound;
      return false;
    }
    cell(r, c) = east;
    return true;
  }

  void extend(int m) {
    if (m > n_) {
      complete();
      return;
    }
    const std::int64_t prev = cell(m - 1, 0);
    const std::int64_t north = cell(m - 2, 1);
    const std::int64_t step = prev / std::gcd(prev, 1 + north);
    for (std::int64_t d = step == 1 ? 1 : step - 1; d <= bound_; d += step) {
      ++stats.nodes;
      cell(m, 0) = d;
      bool ok = true;
      for (int c = 1; c < m && ok; ++c) ok = knit(m - c, c);
      if (ok) extend(m + 1);
    }
  }

  // Knit the rest of the period column by column and record the diagonal.
  void complete() {
    const int period = n_ + 3;
    for (int c = 1; c <= period; ++c) {
      for (int r = 1; r <= n_; ++r) {
        if (!knit(r, c)) return;
      }
    }
    for (int r = 1; r <= n_; ++r) {
      if (cell(r, period) != cell(r, 0)) {
        throw TheoremViolation("arithmetic pattern is not (n+3)-periodic in row " +
                               std::to_string(r));
      }
    }
    Diagonal d(static_cast<std::size_t>(n_));
    for (int r = 1; r <= n_; ++r) d[static_cast<std::size_t>(r - 1)] = cell(r, 0);
    out_->push_back(std::move(d));
  }

  int n_;
  std::int64_t bound_;
  std::size_t stride_;
  std::vector<std::int64_t> cells_;
  std::vector<Diagonal>* out_ = nullptr;
};

}  // namespace

std::vector<Diagonal> enumerate_arithmetic_diagonals(const SearchConfig& cfg, SearchStats* stats) {
  cfg.validate();
  unsigned jobs = cfg.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.jobs;
  jobs = static_cast<unsigned>(std::min<std::int64_t>(jobs, cfg.bound));

  // Branches are indexed by d_1; each is written by exactly one worker.
  std::vector<std::vector<Diagonal>> branches(static_cast<std::size_t>(cfg.bound));
  std::vector<SearchStats> worker_stats(jobs);
  std::atomic<std::int64_t> next{1};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto work = [&](unsigned id) {
    DiagonalSearch search(cfg.width, cfg.bound);
    try {
      for (std::int64_t d1 = next++; d1 <= cfg.bound && !failed; d1 = next++) {
        search.run_branch(d1, branches[static_cast<std::size_t>(d1 - 1)]);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
    worker_stats[id] = search.stats;
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Diagonal> out;
  for (auto& b : branches) {
    std::move(b.begin(), b.end(), std::back_inserter(out));
  }
  if (stats) {
    *stats = {};
    for (const auto& s : worker_stats) {
      stats->nodes += s.nodes;
      stats->pruned_integrality += s.pruned_integrality;
      stats->pruned_bound += s.pruned_bound;
    }
  }
  return out;
}

std::vector<YFrieze> enumerate_arithmetic_yfriezes(const SearchConfig& cfg) {
  std::vector<YFrieze> out;
  for (const auto& d : enumerate_arithmetic_diagonals(cfg)) {
    std::vector<Rational> values(d.begin(), d.end());
    YFrieze y = y_knit_horizontal(ZigZag::diagonal(std::move(values)));
    if (!y.is_arithmetic() || y.max_entry() > Rational{static_cast<long>(cfg.bound)}) {
      throw TheoremViolation("integer search and exact knitting disagree");
    }
    out.push_back(std::move(y));
  }
  return out;
}

YFrieze unitary_pattern(int width) {
  if (width < 1) throw DomainError("width must be at least 1");
  std::vector<Rational> values;
  for (long v = 1; v <= width; ++v) values.emplace_back(v);
  YFrieze y = y_knit_horizontal(ZigZag::diagonal(std::move(values)));
  if (!y.is_arithmetic()) {
    throw TheoremViolation("knitting (1, ..., " + std::to_string(width) +
                           ") gave a non-arithmetic pattern");
  }
  return y;
}

}  // namespace friezekit

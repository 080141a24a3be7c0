#include "mpc/complexity.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "mpc/error.hpp"
#include "mpc/oracle.hpp"

namespace mpc {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_add_overflow(a, b, &out) ? std::numeric_limits<std::uint64_t>::max() : out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_mul_overflow(a, b, &out) ? std::numeric_limits<std::uint64_t>::max() : out;
}

// largest[k] = greatest value of a k-token expression (index 0 unused).
// Both operations are monotone, so the maximum over a split is attained by
// maximizing each side independently.
std::vector<std::uint64_t> largest_values_until(std::uint64_t m, std::uint64_t n) {
  std::vector<std::uint64_t> largest{0, m};
  while (largest.back() < n) {
    const std::size_t k = largest.size();
    std::uint64_t best = 0;
    for (std::size_t i = 1; i <= k / 2; ++i) {
      const std::uint64_t a = largest[i];
      const std::uint64_t b = largest[k - i];
      best = std::max({best, saturating_add(a, b), saturating_mul(a, b)});
    }
    largest.push_back(best);
  }
  return largest;
}

u128 pow_saturating(u128 base, unsigned exp) {
  constexpr u128 cap = u128{1} << 100;
  u128 out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    out *= base;
    if (out > cap) return cap;
  }
  return out;
}

constexpr std::uint64_t kSumBlock = 256;

}  // namespace

unsigned token_lower_bound(std::uint64_t m, std::uint64_t n) {
  if (m < 1) throw RangeError("base m must be at least 1");
  const auto largest = largest_values_until(m, n);
  return static_cast<unsigned>(largest.size() - 1);
}

ComplexityTable build_table(std::uint64_t m, std::uint64_t N, const BuildOptions& options) {
  if (m < 1) throw RangeError("base m must be at least 1");
  if (m > std::numeric_limits<std::uint32_t>::max()) throw RangeError("base m too large");
  if (N < m) throw RangeError("table limit N must be at least m");
  if (N > options.max_limit) {
    throw ResourceLimitError("table limit " + std::to_string(N) + " exceeds guard " +
                             std::to_string(options.max_limit));
  }

  ComplexityTable table;
  table.base_ = m;
  table.values_.assign(N + 1, 0);
  table.splits_.assign(N + 1, Split{});

  // Every n <= 2m is m + (n - m) or a single token, so two levels suffice.
  const std::uint64_t seed_limit = std::min(N, 2 * m);
  const ReachableSets seeds = build_reachable(m, 2, 2 * m);

  const auto largest = largest_values_until(m, N);
  unsigned lower = 1;

  std::uint16_t* v = table.values_.data();
  for (std::uint64_t n = 1; n <= N; ++n) {
    while (largest[lower] < n) ++lower;
    if (n <= m) {
      v[n] = 1;
      table.splits_[n] = Split{SplitKind::Base, 0};
      continue;
    }

    unsigned best = std::numeric_limits<unsigned>::max();
    Split split{};
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d != 0) continue;
      const unsigned cand = unsigned{v[d]} + v[n / d];
      if (cand < best) {
        best = cand;
        split = Split{SplitKind::Factor, static_cast<std::uint32_t>(d)};
        if (options.early_exit && best == lower) break;
      }
    }

    const std::uint64_t half = n / 2;
    for (std::uint64_t start = 1; start <= half; start += kSumBlock) {
      if (options.early_exit && best == lower) break;
      const std::uint64_t end = std::min(half, start + kSumBlock - 1);
      unsigned block_min = std::numeric_limits<unsigned>::max();
      for (std::uint64_t e = start; e <= end; ++e) {
        block_min = std::min(block_min, unsigned{v[e]} + v[n - e]);
      }
      if (block_min >= best) continue;
      std::uint64_t e = start;
      while (unsigned{v[e]} + v[n - e] != block_min) ++e;
      best = block_min;
      split = Split{SplitKind::Sum, static_cast<std::uint32_t>(e)};
    }

    if (n <= seed_limit) {
      const auto seeded = seeds.min_tokens(n);
      if (!seeded || *seeded != best) {
        throw std::logic_error("recursion disagrees with oracle seed at n=" + std::to_string(n));
      }
    }
    v[n] = static_cast<std::uint16_t>(best);
    table.splits_[n] = split;
  }
  return table;
}

ComplexityTable ComplexityTable::from_parts(std::uint64_t m, std::vector<std::uint16_t> values,
                                            std::vector<Split> splits) {
  if (m < 1) throw FormatError("base m must be at least 1", 0);
  if (values.size() != splits.size() || values.size() < 2) throw FormatError("table parts have mismatched sizes", 0);
  const std::uint64_t N = values.size() - 1;
  if (N < m) throw FormatError("table limit below base", 0);
  for (std::uint64_t n = 1; n <= N; ++n) {
    const Split s = splits[n];
    bool ok = false;
    switch (s.kind) {
      case SplitKind::Base:
        ok = n <= m && values[n] == 1 && s.arg == 0;
        break;
      case SplitKind::Sum:
        ok = n > m && s.arg >= 1 && s.arg <= n / 2 && values[n] == values[s.arg] + values[n - s.arg];
        break;
      case SplitKind::Factor:
        ok = n > m && s.arg >= 2 && std::uint64_t{s.arg} * s.arg <= n && n % s.arg == 0 &&
             values[n] == values[s.arg] + values[n / s.arg];
        break;
    }
    if (!ok) throw FormatError("entry " + std::to_string(n) + " inconsistent with its split", 0);
  }
  ComplexityTable table;
  table.base_ = m;
  table.values_ = std::move(values);
  table.splits_ = std::move(splits);
  return table;
}

unsigned complexity(const ComplexityTable& table, std::uint64_t n) {
  if (n < 1 || n > table.limit()) {
    throw RangeError("n=" + std::to_string(n) + " outside table range 1.." + std::to_string(table.limit()));
  }
  return table.value(n);
}

Expression witness(const ComplexityTable& table, std::uint64_t n) {
  if (n < 1 || n > table.limit()) {
    throw RangeError("n=" + std::to_string(n) + " outside table range 1.." + std::to_string(table.limit()));
  }
  const Split s = table.split(n);
  switch (s.kind) {
    case SplitKind::Base:
      return Expression::leaf(n);
    case SplitKind::Sum:
      return Expression::sum(witness(table, s.arg), witness(table, n - s.arg));
    case SplitKind::Factor:
      return Expression::product(witness(table, s.arg), witness(table, n / s.arg));
  }
  throw std::logic_error("unknown split kind");
}

SubadditivityReport check_subadditivity(const ComplexityTable& table, std::optional<std::uint64_t> pair_budget,
                                        std::uint64_t seed) {
  const std::uint64_t N = table.limit();
  SubadditivityReport report;

  auto check = [&](std::uint64_t a, std::uint64_t b) {
    ++report.pairs_checked;
    const unsigned bound = table.value(a) + table.value(b);
    if (table.value(a + b) > bound) report.violations.push_back({a, b, SplitOp::Sum});
    if (a * b <= N && table.value(a * b) > bound) report.violations.push_back({a, b, SplitOp::Product});
  };

  // Pairs 1 <= a <= b with a + b <= N.
  std::uint64_t total = 0;
  for (std::uint64_t a = 1; 2 * a <= N; ++a) total += N - 2 * a + 1;

  if (pair_budget && *pair_budget < total) {
    report.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(1, N - 1);
    while (report.pairs_checked < *pair_budget) {
      std::uint64_t a = pick(rng);
      std::uint64_t b = pick(rng);
      if (a > b) std::swap(a, b);
      if (a + b > N) continue;
      check(a, b);
    }
    return report;
  }

  for (std::uint64_t a = 1; 2 * a <= N; ++a) {
    for (std::uint64_t b = a; a + b <= N; ++b) check(a, b);
  }
  return report;
}

namespace {

void check_range(const ComplexityTable& table, std::uint64_t first, std::uint64_t last) {
  if (first < 1 || first > last || last > table.limit()) {
    throw RangeError("range [" + std::to_string(first) + ", " + std::to_string(last) + "] outside table 1.." +
                     std::to_string(table.limit()));
  }
}

}  // namespace

BoundsReport verify_bounds_binary(const ComplexityTable& table, std::uint64_t first, std::uint64_t last) {
  if (table.base() != 2) throw RangeError("binary bounds need an m=2 table");
  check_range(table, first, last);
  BoundsReport report{first, last, 0, {}};
  for (std::uint64_t n = first; n <= last; ++n) {
    const unsigned v = table.value(n);
    ++report.checked;
    // log2(n) <= v  <=>  n <= 2^v
    if (v < 64 && n > (std::uint64_t{1} << v)) report.violations.push_back({n, v, BoundSide::Lower});
    if (n >= 2) {
      const unsigned upper = static_cast<unsigned>(std::bit_width(n) - 1) + static_cast<unsigned>(std::popcount(n)) - 1;
      if (v > upper) report.violations.push_back({n, v, BoundSide::Upper});
    }
  }
  return report;
}

BoundsReport verify_bounds_unary(const ComplexityTable& table, std::uint64_t first, std::uint64_t last) {
  if (table.base() != 1) throw RangeError("unary bounds need an m=1 table");
  check_range(table, first, last);
  BoundsReport report{first, last, 0, {}};
  for (std::uint64_t n = std::max<std::uint64_t>(first, 2); n <= last; ++n) {
    const unsigned v = table.value(n);
    ++report.checked;
    const u128 cube = u128{n} * n * n;
    // 3 log3(n) <= v  <=>  n^3 <= 3^v ;  v <= 3 log2(n)  <=>  2^v <= n^3
    if (cube > pow_saturating(3, v)) report.violations.push_back({n, v, BoundSide::Lower});
    if (pow_saturating(2, v) > cube) report.violations.push_back({n, v, BoundSide::Upper});
  }
  return report;
}

}  // namespace mpc

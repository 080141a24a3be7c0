#include "mpc/complexity.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "mpc/error.hpp"

namespace mpc {
namespace {

// Full scan over every divisor and every sum split, no pruning.
std::vector<unsigned> plain_recursion(std::uint64_t m, std::uint64_t N) {
  std::vector<unsigned> v(N + 1, 0);
  for (std::uint64_t n = 1; n <= N; ++n) {
    if (n <= m) {
      v[n] = 1;
      continue;
    }
    unsigned best = ~0u;
    for (std::uint64_t a = 1; a < n; ++a) best = std::min(best, v[a] + v[n - a]);
    for (std::uint64_t d = 2; d < n; ++d) {
      if (n % d == 0) best = std::min(best, v[d] + v[n / d]);
    }
    v[n] = best;
  }
  return v;
}

TEST(Complexity, BinaryPrefix) {
  const ComplexityTable t = build_table(2, 23);
  const std::vector<unsigned> expected{1, 2, 2, 3, 3, 4, 3, 4, 4, 5, 4, 5, 5, 5, 4, 5, 5, 6, 5, 6, 6, 7};
  for (std::uint64_t n = 2; n <= 23; ++n) EXPECT_EQ(t.value(n), expected[n - 2]) << n;
}

TEST(Complexity, PointValues) {
  EXPECT_EQ(complexity(build_table(2, 47), 47), 8u);
  EXPECT_EQ(complexity(build_table(1, 6), 6), 5u);
  const ComplexityTable t = build_table(2, 30);
  EXPECT_EQ(complexity(t, 20), 5u);
  EXPECT_EQ(complexity(t, 1), 1u);
  EXPECT_EQ(complexity(build_table(3, 10), 10), 3u);
}

TEST(Complexity, NotMonotone) {
  const ComplexityTable t = build_table(2, 24);
  EXPECT_EQ(t.value(23), 7u);
  EXPECT_EQ(t.value(24), 5u);
}

TEST(Complexity, RangeAndGuardErrors) {
  const ComplexityTable t = build_table(2, 10);
  EXPECT_THROW(complexity(t, 0), RangeError);
  EXPECT_THROW(complexity(t, 11), RangeError);
  EXPECT_THROW(witness(t, 11), RangeError);
  EXPECT_THROW(build_table(0, 10), RangeError);
  EXPECT_THROW(build_table(5, 4), RangeError);
  EXPECT_THROW(build_table(2, 1000, BuildOptions{true, 999}), ResourceLimitError);
}

TEST(Complexity, TieBreakPrefersSmallestFactor) {
  const ComplexityTable t = build_table(2, 100);
  EXPECT_EQ(t.split(20), (Split{SplitKind::Factor, 2}));
  EXPECT_EQ(t.split(2), (Split{SplitKind::Base, 0}));
  EXPECT_EQ(t.split(3), (Split{SplitKind::Sum, 1}));
  // 23 is prime: the smallest eta attaining 7 is 1 (1 + 22).
  EXPECT_EQ(t.split(23), (Split{SplitKind::Sum, 1}));
}

TEST(Complexity, WitnessExamples) {
  const ComplexityTable t = build_table(2, 30);
  const Expression w20 = witness(t, 20);
  EXPECT_EQ(evaluate(w20), 20u);
  EXPECT_EQ(w20.token_count(), 5u);
  const Expression w2 = witness(t, 2);
  ASSERT_TRUE(w2.is_leaf());
  EXPECT_EQ(w2.token(), 2u);
  const Expression w23 = witness(t, 23);
  EXPECT_EQ(evaluate(w23), 23u);
  EXPECT_EQ(w23.token_count(), 7u);
}

TEST(Complexity, TokenLowerBound) {
  EXPECT_EQ(token_lower_bound(2, 1), 1u);
  EXPECT_EQ(token_lower_bound(2, 2), 1u);
  EXPECT_EQ(token_lower_bound(2, 3), 2u);
  EXPECT_EQ(token_lower_bound(2, 1024), 10u);
  EXPECT_EQ(token_lower_bound(2, 1025), 11u);
  EXPECT_EQ(token_lower_bound(1, 6), 5u);
}

TEST(ComplexityProperty, MatchesPlainRecursion) {
  for (std::uint64_t m = 1; m <= 6; ++m) {
    const std::uint64_t N = 1500;
    const ComplexityTable t = build_table(m, N);
    const auto plain = plain_recursion(m, N);
    for (std::uint64_t n = 1; n <= N; ++n) ASSERT_EQ(t.value(n), plain[n]) << "m=" << m << " n=" << n;
  }
}

TEST(ComplexityProperty, EarlyExitChangesNothing) {
  for (std::uint64_t m : {1u, 2u, 3u, 7u}) {
    EXPECT_EQ(build_table(m, 5000), build_table(m, 5000, BuildOptions{false})) << m;
  }
}

TEST(ComplexityProperty, BaseInvariantAndMonotoneInBase) {
  const std::uint64_t N = 3000;
  std::vector<ComplexityTable> tables;
  for (std::uint64_t m = 1; m <= 5; ++m) tables.push_back(build_table(m, N));
  for (std::uint64_t m = 1; m <= 5; ++m) {
    const ComplexityTable& t = tables[m - 1];
    for (std::uint64_t n = 1; n <= N; ++n) {
      ASSERT_EQ(t.value(n) == 1, n <= m) << "m=" << m << " n=" << n;
      if (m > 1) ASSERT_LE(t.value(n), tables[m - 2].value(n)) << "m=" << m << " n=" << n;
    }
  }
}

TEST(ComplexityProperty, WitnessConsistency) {
  for (std::uint64_t m = 1; m <= 4; ++m) {
    const ComplexityTable t = build_table(m, 4000);
    for (std::uint64_t n = 1; n <= t.limit(); ++n) {
      const Expression w = witness(t, n);
      ASSERT_EQ(evaluate(w), n);
      ASSERT_EQ(w.token_count(), t.value(n));
      ASSERT_LE(w.max_token(), m);
    }
  }
}

TEST(ComplexityProperty, SplitsAttainValues) {
  const ComplexityTable t = build_table(3, 5000);
  for (std::uint64_t n = 4; n <= t.limit(); ++n) {
    const Split s = t.split(n);
    const unsigned sum = s.kind == SplitKind::Sum ? t.value(s.arg) + t.value(n - s.arg)
                                                  : t.value(s.arg) + t.value(n / s.arg);
    ASSERT_EQ(sum, t.value(n)) << n;
  }
}

TEST(Subadditivity, ExhaustiveAndSampled) {
  const ComplexityTable t = build_table(2, 100);
  const SubadditivityReport full = check_subadditivity(t);
  EXPECT_TRUE(full.ok());
  EXPECT_FALSE(full.sampled);
  EXPECT_EQ(full.pairs_checked, 2500u);

  const SubadditivityReport sample = check_subadditivity(build_table(2, 20000), 100000);
  EXPECT_TRUE(sample.ok());
  EXPECT_TRUE(sample.sampled);
  EXPECT_EQ(sample.pairs_checked, 100000u);
}

TEST(Subadditivity, SmallPairs) {
  const ComplexityTable t = build_table(2, 10);
  EXPECT_LE(t.value(5), t.value(2) + t.value(3));
  EXPECT_LE(t.value(6), t.value(2) + t.value(3));
  EXPECT_EQ(t.value(5), 3u);
  EXPECT_EQ(t.value(6), 3u);
  EXPECT_LE(t.value(2), 2 * t.value(1));
}

TEST(Subadditivity, DetectsCorruptTable) {
  std::vector<std::uint16_t> values{0, 1, 1, 2, 5};
  std::vector<Split> splits{{}, {}, {}, {SplitKind::Sum, 1}, {SplitKind::Sum, 1}};
  EXPECT_THROW(ComplexityTable::from_parts(2, values, splits), FormatError);
}

TEST(Bounds, BinaryExamples) {
  const ComplexityTable t = build_table(2, 100000);
  EXPECT_TRUE(verify_bounds_binary(t, 1, 100000).ok());
  EXPECT_EQ(t.value(20), 5u);  // 4.32 <= 5 <= 4 + 2 - 1
  EXPECT_EQ(t.value(2), 1u);
  EXPECT_LE(t.value(47), 9u);
  EXPECT_THROW(verify_bounds_binary(build_table(1, 10), 1, 10), RangeError);
  EXPECT_THROW(verify_bounds_binary(t, 5, 100001), RangeError);
}

TEST(Bounds, UnaryExamples) {
  const ComplexityTable t = build_table(1, 10000);
  const BoundsReport r = verify_bounds_unary(t, 2, 10000);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked, 9999u);
  EXPECT_EQ(t.value(6), 5u);
  EXPECT_EQ(t.value(3), 3u);
  EXPECT_EQ(t.value(2), 2u);
  for (std::uint64_t n : {2u, 3u, 6u}) {
    const double v = t.value(n);
    EXPECT_LE(3.0 * std::log(n) / std::log(3.0), v + 1e-12);
    EXPECT_LE(v, 3.0 * std::log2(n));
  }
}

TEST(Bounds, ReportsViolations) {
  // Split-consistent but suboptimal: 4 = 1 + 3 costs 3 tokens, above the
  // upper bound floor(log2 4) + nu(4) - 1 = 2.
  std::vector<std::uint16_t> values{0, 1, 1, 2, 3};
  std::vector<Split> splits{{}, {}, {}, {SplitKind::Sum, 1}, {SplitKind::Sum, 1}};
  const ComplexityTable bad = ComplexityTable::from_parts(2, values, splits);
  const BoundsReport r = verify_bounds_binary(bad, 1, 4);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].n, 4u);
  EXPECT_EQ(r.violations[0].side, BoundSide::Upper);
}

}  // namespace
}  // namespace mpc

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpc/expression.hpp"

namespace mpc {

inline constexpr std::uint64_t kMaxTableLimit = 100'000'000;

enum class SplitKind : char { Base = 'B', Sum = 'S', Factor = 'F' };

// How a table entry attains its value: a single token (Base), the sum
// eta + (n - eta) (Sum, arg = eta), or the product d * (n / d) (Factor,
// arg = d). Base entries carry arg 0.
struct Split {
  SplitKind kind = SplitKind::Base;
  std::uint32_t arg = 0;

  friend bool operator==(const Split&, const Split&) = default;
};

struct BuildOptions {
  // Stop scanning splits of n once the running minimum reaches the least
  // token count able to reach n at all. Never changes the result.
  bool early_exit = true;
  std::uint64_t max_limit = kMaxTableLimit;
};

// The m-ary complexity of every n in 1..N together with the split that
// attains it. Immutable once built.
class ComplexityTable {
 public:
  // Assembles a table from stored parts, checking that every entry is
  // consistent with its split. Throws FormatError on inconsistency.
  static ComplexityTable from_parts(std::uint64_t m, std::vector<std::uint16_t> values,
                                    std::vector<Split> splits);

  std::uint64_t base() const noexcept { return base_; }
  std::uint64_t limit() const noexcept { return values_.size() - 1; }

  // Unchecked accessors; n must be in 1..limit().
  unsigned value(std::uint64_t n) const noexcept { return values_[n]; }
  Split split(std::uint64_t n) const noexcept { return splits_[n]; }

  // Index 0 is unused and holds 0.
  std::span<const std::uint16_t> values() const noexcept { return values_; }

  friend bool operator==(const ComplexityTable&, const ComplexityTable&) = default;

 private:
  friend ComplexityTable build_table(std::uint64_t, std::uint64_t, const BuildOptions&);

  std::uint64_t base_ = 0;
  std::vector<std::uint16_t> values_;
  std::vector<Split> splits_;
};

// Builds the table for base m up to N (N >= m >= 1). Entries n <= 2m are
// seeded from the brute-force oracle, the rest follow the recursion
//   v[n] = min( v[d] + v[n/d] for 1 < d <= sqrt(n), d | n,
//               v[e] + v[n-e] for 1 <= e <= n/2 ).
// Ties go to factor splits over sum splits, then to the smallest d or e.
ComplexityTable build_table(std::uint64_t m, std::uint64_t N, const BuildOptions& options = {});

// Least k such that some k-token expression over {1..m} can reach n
// (a lower bound on the complexity of n).
unsigned token_lower_bound(std::uint64_t m, std::uint64_t n);

// Checked lookup; RangeError when n is outside 1..limit().
unsigned complexity(const ComplexityTable& table, std::uint64_t n);

// Minimal expression for n rebuilt from the stored splits.
Expression witness(const ComplexityTable& table, std::uint64_t n);

enum class SplitOp { Sum, Product };

struct SubadditivityViolation {
  std::uint64_t a;
  std::uint64_t b;
  SplitOp op;
};

struct SubadditivityReport {
  std::uint64_t pairs_checked = 0;
  bool sampled = false;
  std::vector<SubadditivityViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Checks v[a+b] <= v[a] + v[b] and v[a*b] <= v[a] + v[b] over all pairs
// 1 <= a <= b whose sum is at most N (products when also at most N). With a
// pair_budget below the number of such pairs, a seeded uniform sample of
// pair_budget pairs is checked instead.
SubadditivityReport check_subadditivity(const ComplexityTable& table,
                                        std::optional<std::uint64_t> pair_budget = std::nullopt,
                                        std::uint64_t seed = 0x5eed);

enum class BoundSide { Lower, Upper };

struct BoundViolation {
  std::uint64_t n;
  unsigned value;
  BoundSide side;
};

struct BoundsReport {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  std::uint64_t checked = 0;
  std::vector<BoundViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// m = 2: log2(n) <= v[n] for n >= 1 and v[n] <= floor(log2 n) + popcount(n) - 1
// for n >= 2, over [first, last]. Comparisons are exact integer forms.
BoundsReport verify_bounds_binary(const ComplexityTable& table, std::uint64_t first, std::uint64_t last);

// m = 1: 3 log3(n) <= v[n] <= 3 log2(n) for 1 < n, over [first, last].
BoundsReport verify_bounds_unary(const ComplexityTable& table, std::uint64_t first, std::uint64_t last);

}  // namespace mpc

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace mpc {

inline constexpr std::uint64_t kDefaultLevelCardinalityLimit = 10'000'000;

// Exact sets E(k) of integers in [1, value_cap] expressible with exactly k
// tokens from {1..m} using + and *, for k = 1..k_max. Intermediate values
// above the cap are discarded; this is sound because both operations are
// non-decreasing in each operand over positive integers.
class ReachableSets {
 public:
  std::uint64_t base() const noexcept { return base_; }
  unsigned k_max() const noexcept { return static_cast<unsigned>(levels_.size()); }
  std::uint64_t value_cap() const noexcept { return value_cap_; }

  bool contains(unsigned k, std::uint64_t value) const;
  std::size_t cardinality(unsigned k) const;
  // Members of E(k), ascending.
  std::vector<std::uint64_t> level(unsigned k) const;
  // Least k <= k_max with value in E(k).
  std::optional<unsigned> min_tokens(std::uint64_t value) const;

 private:
  friend ReachableSets build_reachable(std::uint64_t, unsigned, std::uint64_t, std::uint64_t);

  using Bits = std::vector<std::uint64_t>;

  std::uint64_t base_ = 0;
  std::uint64_t value_cap_ = 0;
  // levels_[k-1] is a bitset over [0, value_cap]; bit v set iff v in E(k).
  std::vector<Bits> levels_;
};

// Builds E(1..k_max). Requires m >= 1, k_max >= 1, value_cap >= m; throws
// RangeError otherwise and ResourceLimitError when some level would hold
// more than max_level_cardinality values.
ReachableSets build_reachable(std::uint64_t m, unsigned k_max, std::uint64_t value_cap,
                              std::uint64_t max_level_cardinality = kDefaultLevelCardinalityLimit);

// Brute-force value of the m-ary complexity of n: the least k <= k_max with
// n in E(k). Throws NotReachableError when n needs more than k_max tokens.
unsigned oracle_complexity(std::uint64_t n, std::uint64_t m, unsigned k_max);

}  // namespace mpc

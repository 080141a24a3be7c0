#include "mpc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mpc/error.hpp"

namespace mpc {

namespace {

constexpr std::uint64_t kMaxValueCap = std::uint64_t{1} << 32;

std::size_t words_for(std::uint64_t cap) { return static_cast<std::size_t>(cap / 64 + 1); }

bool test_bit(const std::vector<std::uint64_t>& bits, std::uint64_t v) {
  return (bits[v / 64] >> (v % 64)) & 1u;
}

void set_bit(std::vector<std::uint64_t>& bits, std::uint64_t v) { bits[v / 64] |= std::uint64_t{1} << (v % 64); }

template <typename F>
void for_each_member(const std::vector<std::uint64_t>& bits, std::uint64_t limit, F&& f) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word != 0) {
      const std::uint64_t v = w * 64 + static_cast<std::uint64_t>(std::countr_zero(word));
      if (v > limit) return;
      f(v);
      word &= word - 1;
    }
  }
}

// out |= (src << shift), truncated to out's size.
void or_shifted(std::vector<std::uint64_t>& out, const std::vector<std::uint64_t>& src, std::uint64_t shift) {
  const std::size_t word_shift = static_cast<std::size_t>(shift / 64);
  const unsigned bit_shift = static_cast<unsigned>(shift % 64);
  if (word_shift >= out.size()) return;
  for (std::size_t i = out.size(); i-- > word_shift;) {
    const std::size_t s = i - word_shift;
    std::uint64_t w = src[s] << bit_shift;
    if (bit_shift != 0 && s > 0) w |= src[s - 1] >> (64 - bit_shift);
    out[i] |= w;
  }
}

void clear_above(std::vector<std::uint64_t>& bits, std::uint64_t cap) {
  const std::size_t last = static_cast<std::size_t>(cap / 64);
  const unsigned keep = static_cast<unsigned>(cap % 64) + 1;
  if (keep < 64) bits[last] &= (std::uint64_t{1} << keep) - 1;
  bits[0] &= ~std::uint64_t{1};  // 0 is never a member
}

std::size_t popcount(const std::vector<std::uint64_t>& bits) {
  std::size_t n = 0;
  for (std::uint64_t w : bits) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

}  // namespace

bool ReachableSets::contains(unsigned k, std::uint64_t value) const {
  if (k < 1 || k > levels_.size() || value < 1 || value > value_cap_) return false;
  return test_bit(levels_[k - 1], value);
}

std::size_t ReachableSets::cardinality(unsigned k) const {
  if (k < 1 || k > levels_.size()) throw RangeError("level " + std::to_string(k) + " not computed");
  return popcount(levels_[k - 1]);
}

std::vector<std::uint64_t> ReachableSets::level(unsigned k) const {
  if (k < 1 || k > levels_.size()) throw RangeError("level " + std::to_string(k) + " not computed");
  std::vector<std::uint64_t> out;
  for_each_member(levels_[k - 1], value_cap_, [&](std::uint64_t v) { out.push_back(v); });
  return out;
}

std::optional<unsigned> ReachableSets::min_tokens(std::uint64_t value) const {
  for (unsigned k = 1; k <= levels_.size(); ++k) {
    if (contains(k, value)) return k;
  }
  return std::nullopt;
}

ReachableSets build_reachable(std::uint64_t m, unsigned k_max, std::uint64_t value_cap,
                              std::uint64_t max_level_cardinality) {
  if (m < 1) throw RangeError("base m must be at least 1");
  if (k_max < 1) throw RangeError("k_max must be at least 1");
  if (value_cap < m) throw RangeError("value_cap must be at least m");
  if (value_cap > kMaxValueCap) throw ResourceLimitError("value_cap beyond oracle range");

  ReachableSets sets;
  sets.base_ = m;
  sets.value_cap_ = value_cap;
  sets.levels_.reserve(k_max);

  const std::size_t words = words_for(value_cap);
  std::vector<std::uint64_t> first(words, 0);
  for (std::uint64_t t = 1; t <= m; ++t) set_bit(first, t);
  if (m > max_level_cardinality) throw ResourceLimitError("level 1 exceeds cardinality limit");
  sets.levels_.push_back(std::move(first));

  for (unsigned k = 2; k <= k_max; ++k) {
    std::vector<std::uint64_t> next(words, 0);
    // + and * commute, so i <= k - i covers every split.
    for (unsigned i = 1; i <= k / 2; ++i) {
      const auto& lhs = sets.levels_[i - 1];
      const auto& rhs = sets.levels_[k - i - 1];
      for_each_member(lhs, value_cap, [&](std::uint64_t a) {
        or_shifted(next, rhs, a);
        const std::uint64_t limit = value_cap / a;
        for_each_member(rhs, limit, [&](std::uint64_t b) { set_bit(next, a * b); });
      });
    }
    clear_above(next, value_cap);
    if (popcount(next) > max_level_cardinality) {
      throw ResourceLimitError("level " + std::to_string(k) + " exceeds cardinality limit");
    }
    sets.levels_.push_back(std::move(next));
  }
  return sets;
}

unsigned oracle_complexity(std::uint64_t n, std::uint64_t m, unsigned k_max) {
  if (n < 1) throw RangeError("n must be positive");
  const ReachableSets sets = build_reachable(m, k_max, std::max(n, m));
  if (auto k = sets.min_tokens(n)) return *k;
  throw NotReachableError(std::to_string(n) + " needs more than " + std::to_string(k_max) + " tokens");
}

}  // namespace mpc

#include "mpc/chain_solver.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mpc/error.hpp"

namespace mpc {

unsigned nu2(std::uint64_t n) { return static_cast<unsigned>(std::popcount(n)); }

unsigned chain_lower_bound(std::uint64_t n) {
  if (n < 1) throw RangeError("n must be positive");
  return n == 1 ? 0u : static_cast<unsigned>(std::bit_width(n - 1));
}

unsigned binary_method_length(std::uint64_t n) {
  if (n < 1) throw RangeError("n must be positive");
  return static_cast<unsigned>(std::bit_width(n) - 1) + nu2(n) - 1;
}

AdditionChain binary_method_chain(std::uint64_t n) {
  if (n < 1) throw RangeError("n must be positive");
  std::vector<std::uint64_t> entries{1};
  for (int bit = static_cast<int>(std::bit_width(n)) - 2; bit >= 0; --bit) {
    entries.push_back(entries.back() * 2);
    if ((n >> bit) & 1u) entries.push_back(entries.back() + 1);
  }
  return AdditionChain(std::move(entries));
}

namespace {

// Depth-first search for a chain of exactly `length` steps ending at target.
class ChainSearch {
 public:
  ChainSearch(std::uint64_t target, unsigned length, std::uint64_t& nodes, std::uint64_t budget)
      : target_(target), length_(length), nodes_(nodes), budget_(budget), chain_(length + 1, 0) {
    candidates_.resize(length + 1);
    for (unsigned k = 0; k <= length; ++k) candidates_[k].reserve((k + 1) * (k + 2) / 2);
  }

  bool run() {
    chain_[0] = 1;
    return extend(0);
  }

  std::vector<std::uint64_t> chain() const { return chain_; }

 private:
  bool reaches(std::uint64_t value, unsigned steps) const {
    return steps >= 64 || value >= (target_ >> steps) + ((target_ & ((std::uint64_t{1} << steps) - 1)) != 0);
  }

  bool extend(unsigned k) {
    if (++nodes_ > budget_) throw BudgetExhaustedError("node budget exhausted", 0);
    const unsigned remaining = length_ - k;
    const std::uint64_t top = chain_[k];

    if (remaining == 1) {
      std::size_t lo = 0;
      std::size_t hi = k;
      while (lo <= hi) {
        const std::uint64_t s = chain_[lo] + chain_[hi];
        if (s == target_) {
          chain_[k + 1] = target_;
          return true;
        }
        if (s < target_) {
          ++lo;
        } else {
          if (hi == 0) break;
          --hi;
        }
      }
      return false;
    }

    auto& next = candidates_[k];
    next.clear();
    for (std::size_t i = k + 1; i-- > 0;) {
      if (chain_[i] * 2 <= top) break;
      for (std::size_t j = i + 1; j-- > 0;) {
        const std::uint64_t s = chain_[i] + chain_[j];
        if (s <= top) break;
        if (s >= target_) continue;
        if (!reaches(s, remaining - 1)) break;
        next.push_back(s);
      }
    }
    std::sort(next.begin(), next.end(), std::greater<>());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    for (std::uint64_t s : next) {
      chain_[k + 1] = s;
      if (extend(k + 1)) return true;
    }
    return false;
  }

  std::uint64_t target_;
  unsigned length_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<std::uint64_t> chain_;
  std::vector<std::vector<std::uint64_t>> candidates_;
};

}  // namespace

AdditionChain shortest_chain(std::uint64_t n, const ChainSearchConfig& config) {
  if (n < 1) throw RangeError("n must be positive");
  if (n > (std::uint64_t{1} << 62)) throw OverflowError("n beyond chain search range");
  const unsigned lower = chain_lower_bound(n);
  if (config.max_depth < lower) {
    throw RangeError("max_depth " + std::to_string(config.max_depth) + " below ceil(log2 n) = " +
                     std::to_string(lower));
  }
  if (n == 1) return AdditionChain({1});

  const unsigned binary = binary_method_length(n);
  std::uint64_t nodes = 0;
  for (unsigned length = lower; length < binary && length <= config.max_depth; ++length) {
    ChainSearch search(n, length, nodes, config.node_budget);
    try {
      if (search.run()) return AdditionChain(search.chain());
    } catch (const BudgetExhaustedError&) {
      throw BudgetExhaustedError("chain search for " + std::to_string(n) + " exhausted its node budget at length " +
                                     std::to_string(length),
                                 binary);
    }
  }
  if (binary > config.max_depth) {
    throw BudgetExhaustedError("no chain for " + std::to_string(n) + " within max_depth " +
                                   std::to_string(config.max_depth),
                               binary);
  }
  // Every shorter length failed, so the binary method is optimal.
  return binary_method_chain(n);
}

unsigned ell(std::uint64_t n, const ChainSearchConfig& config) {
  return static_cast<unsigned>(shortest_chain(n, config).length());
}

bool check_ell_bounds(std::uint64_t n, unsigned ell_value) {
  if (n < 2) throw RangeError("chain bounds need n >= 2");
  // log2(n) <= ell  <=>  n <= 2^ell
  const bool lower_ok = ell_value >= 64 || n <= (std::uint64_t{1} << ell_value);
  return lower_ok && ell_value <= binary_method_length(n);
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("chain entry exceeds 64-bit range");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("chain entry exceeds 64-bit range");
  return out;
}

std::vector<std::uint64_t> merge_unique(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint64_t> chain_entries(const Expression& e) {
  switch (e.kind()) {
    case NodeKind::Leaf: {
      const std::uint64_t t = e.token();
      if (t > 2) throw RangeError("chain conversion is defined for tokens 1 and 2 only, got " + std::to_string(t));
      return t == 1 ? std::vector<std::uint64_t>{1} : std::vector<std::uint64_t>{1, 2};
    }
    case NodeKind::Product: {
      std::vector<std::uint64_t> out = chain_entries(e.left());
      const std::uint64_t scale = out.back();
      const std::vector<std::uint64_t> rhs = chain_entries(e.right());
      for (std::size_t i = 1; i < rhs.size(); ++i) out.push_back(checked_mul(scale, rhs[i]));
      return out;
    }
    case NodeKind::Sum: {
      const Expression* leaf = e.right().is_leaf() ? &e.right() : e.left().is_leaf() ? &e.left() : nullptr;
      if (leaf != nullptr) {
        const Expression& other = leaf == &e.right() ? e.left() : e.right();
        const std::uint64_t t = leaf->token();
        if (t > 2) throw RangeError("chain conversion is defined for tokens 1 and 2 only, got " + std::to_string(t));
        std::vector<std::uint64_t> out = chain_entries(other);
        const std::uint64_t top = out.back();
        // Only the one-entry chain (1) lacks 2.
        if (t == 2 && out.size() == 1) out.push_back(2);
        const std::uint64_t next = checked_add(top, t);
        if (next > out.back()) out.push_back(next);
        return out;
      }
      const std::vector<std::uint64_t> lhs = chain_entries(e.left());
      const std::vector<std::uint64_t> rhs = chain_entries(e.right());
      std::vector<std::uint64_t> out = merge_unique(lhs, rhs);
      out.push_back(checked_add(lhs.back(), rhs.back()));
      return out;
    }
  }
  return {};
}

}  // namespace

AdditionChain chain_from_expression(const Expression& e) { return AdditionChain(chain_entries(e)); }

std::vector<ScholzBrauerRow> scholz_brauer_check(unsigned n_max, const ChainSearchConfig& config) {
  if (n_max > 62) throw RangeError("n_max must be at most 62");
  std::vector<ScholzBrauerRow> rows;
  for (unsigned n = 1; n <= n_max; ++n) {
    ScholzBrauerRow row;
    row.n = n;
    row.ell_mersenne = ell((std::uint64_t{1} << n) - 1, config);
    row.bound = n + ell(n, config) - 1;
    row.pass = row.ell_mersenne <= row.bound;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mpc

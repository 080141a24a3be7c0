#pragma once

#include <cstdint>
#include <vector>

#include "mpc/addition_chain.hpp"
#include "mpc/expression.hpp"

namespace mpc {

struct ChainSearchConfig {
  // Longest chain the search will try; must be at least ceil(log2 n).
  unsigned max_depth = 128;
  // Search nodes visited before giving up with BudgetExhaustedError.
  std::uint64_t node_budget = 4'000'000'000;
};

// Number of ones in the binary expansion of n.
unsigned nu2(std::uint64_t n);

// ceil(log2 n), the fewest doublings needed to reach n.
unsigned chain_lower_bound(std::uint64_t n);

// floor(log2 n) + nu2(n) - 1 for n >= 2 (0 for n = 1): the length of the
// left-to-right binary method chain.
unsigned binary_method_length(std::uint64_t n);
AdditionChain binary_method_chain(std::uint64_t n);

// A shortest ascending addition chain ending at n, found by iterative
// deepening on the target length from ceil(log2 n). Successors are sums of
// two entries in (a_k, 2 a_k], tried largest first; a branch is cut when its
// top entry cannot reach n by doubling every remaining step. Among equally
// short chains the first one found in that order is returned.
// Throws RangeError for n < 1 or max_depth < ceil(log2 n), and
// BudgetExhaustedError (carrying the best known length) when the node
// budget or max_depth runs out first.
AdditionChain shortest_chain(std::uint64_t n, const ChainSearchConfig& config = {});

// Length of shortest_chain(n).
unsigned ell(std::uint64_t n, const ChainSearchConfig& config = {});

// log2(n) <= ell_value <= floor(log2 n) + nu2(n) - 1, in exact integer form.
// n must be at least 2.
bool check_ell_bounds(std::uint64_t n, unsigned ell_value);

// Addition chain read off an expression over tokens {1, 2}:
//   1 -> (1);  2 -> (1, 2);
//   a*b -> chain(a) then value(a) times each later entry of chain(b);
//   a+t with t a leaf -> chain(a) extended by value(a)+t;
//   a+b otherwise -> union of chain(a) and chain(b), then value(a)+value(b).
// Entries are kept sorted and distinct. RangeError on a token above 2.
AdditionChain chain_from_expression(const Expression& e);

struct ScholzBrauerRow {
  unsigned n = 0;
  unsigned ell_mersenne = 0;  // ell(2^n - 1)
  unsigned bound = 0;         // n + ell(n) - 1
  bool pass = false;
};

// One row per n in 1..n_max (n_max <= 63).
std::vector<ScholzBrauerRow> scholz_brauer_check(unsigned n_max, const ChainSearchConfig& config = {});

}  // namespace mpc

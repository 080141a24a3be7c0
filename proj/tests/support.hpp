#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "mpc/bfile.hpp"
#include "mpc/expression.hpp"

namespace mpc::test {

inline std::filesystem::path fixture_path(const std::string& file) {
  return std::filesystem::path(MPC_TEST_DATA_DIR) / file;
}

inline BFileSequence fixture(const std::string& file) { return load_bfile(fixture_path(file)); }

// Seeded generators for the property tests. Each test constructs its own so
// failures replay from the printed seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }

  bool coin() { return uniform(0, 1) == 1; }

  // Random tree with at most `tokens` leaves drawn from 1..m. Values stay
  // small enough for 64-bit evaluation when tokens * log2(m+1) < 60.
  Expression expression(std::uint64_t m, unsigned tokens) {
    if (tokens <= 1) return Expression::leaf(uniform(1, m));
    const unsigned left = static_cast<unsigned>(uniform(1, tokens - 1));
    Expression a = expression(m, left);
    Expression b = expression(m, tokens - left);
    return coin() ? Expression::sum(std::move(a), std::move(b)) : Expression::product(std::move(a), std::move(b));
  }

  // Random ascending addition chain with `steps` steps.
  std::vector<std::uint64_t> chain(unsigned steps) {
    std::vector<std::uint64_t> c{1};
    while (c.size() <= steps) {
      const std::uint64_t s = c[uniform(0, c.size() - 1)] + c[uniform(0, c.size() - 1)];
      if (s > c.back()) c.push_back(s);
    }
    return c;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mpc::test

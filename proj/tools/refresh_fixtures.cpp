// Regenerates the committed sequence fixtures under data/.
//
// The sandbox that builds this project has no route to oeis.org, so the
// b-files are recomputed here from their definitions. This program shares
// no code with mpc_core: it is the independent side of every comparison the
// test suites make against data/.
//
//   b003313.txt  shortest addition chain length, n = 1..N
//   b005245.txt  integer complexity (ones only), n = 1..N
//   b117497.txt  factor method over the least prime factor, else n-1 step
//   b117498.txt  best of binary and factor methods over all factorizations
//
// Usage: mpc-fixtures [--out DIR] [--max N] [--only NAME]

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

using u64 = std::uint64_t;

// Exhaustive search: does an ascending chain of exactly `length` steps
// reach target? Cuts: every step at most doubles, the top must be able
// to reach target by doubling, the last step is a pair-sum lookup and the
// second-to-last step only keeps candidates that complete in one step.
class Prover {
 public:
  Prover(u64 target, unsigned length) : target_(target), length_(length), a_(length + 1), buf_(length + 1) {}

  bool exists() {
    a_[0] = 1;
    return step(0);
  }

  u64 nodes() const { return nodes_; }

 private:
  bool in_chain(u64 v, unsigned k) const { return std::binary_search(a_.begin(), a_.begin() + k + 1, v); }

  bool pair_sum(u64 v, unsigned k) const {
    unsigned lo = 0;
    unsigned hi = k;
    while (lo <= hi) {
      const u64 s = a_[lo] + a_[hi];
      if (s == v) return true;
      if (s < v) {
        ++lo;
      } else {
        if (hi == 0) return false;
        --hi;
      }
    }
    return false;
  }

  bool step(unsigned k) {
    ++nodes_;
    const unsigned left = length_ - k;
    const u64 top = a_[k];
    if (left == 1) return pair_sum(target_, k);

    // Smallest admissible next entry: it must reach target in left-1 doublings.
    const unsigned r = left - 1;
    const u64 need = (target_ + (u64{1} << r) - 1) >> r;

    auto& cand = buf_[k];
    cand.clear();
    for (unsigned i = 0; i <= k; ++i) {
      for (unsigned j = i; j <= k; ++j) {
        const u64 s = a_[i] + a_[j];
        if (s > top && s < target_ && s >= need) cand.push_back(s);
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    if (left == 2) {
      // The final step must use the new entry s, otherwise a shorter chain
      // would exist: target = s + x with x in the chain or x = s.
      for (u64 s : cand) {
        const u64 x = target_ - s;
        if (x == s || (x <= top && in_chain(x, k))) return true;
      }
      nodes_ += cand.size();
      return false;
    }

    for (auto it = cand.rbegin(); it != cand.rend(); ++it) {
      a_[k + 1] = *it;
      if (step(k + 1)) return true;
    }
    return false;
  }

  u64 target_;
  unsigned length_;
  std::vector<u64> a_;
  std::vector<std::vector<u64>> buf_;
  u64 nodes_ = 0;
};

std::vector<unsigned> shortest_chain_lengths(u64 N) {
  std::vector<unsigned> len(N + 1, 0);
  const auto started = std::chrono::steady_clock::now();
  for (u64 n = 2; n <= N; ++n) {
    unsigned upper = len[n - 1] + 1;
    for (u64 d = 2; d * d <= n; ++d) {
      if (n % d == 0) upper = std::min(upper, len[d] + len[n / d]);
    }
    // ceil(log2 n), and Schoenhage: log2 n + log2 nu(n) - 2.13.
    unsigned lower = static_cast<unsigned>(std::bit_width(n - 1));
    const double sch = std::log2(static_cast<double>(n)) + std::log2(static_cast<double>(std::popcount(n))) - 2.13;
    lower = std::max(lower, static_cast<unsigned>(std::ceil(sch - 1e-9)));

    unsigned found = upper;
    for (unsigned L = lower; L < upper; ++L) {
      if (Prover(n, L).exists()) {
        found = L;
        break;
      }
    }
    len[n] = found;
    if (n % 1000 == 0) {
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      std::fprintf(stderr, "  ell: n=%llu (%.1fs)\n", static_cast<unsigned long long>(n), secs);
    }
  }
  return len;
}

// Plain O(N^2) recursion with ones only.
std::vector<unsigned> integer_complexity(u64 N) {
  std::vector<unsigned> c(N + 1, 0);
  c[1] = 1;
  for (u64 n = 2; n <= N; ++n) {
    unsigned best = n;
    for (u64 a = 1; a < n; ++a) best = std::min(best, c[a] + c[n - a]);
    for (u64 d = 2; d < n; ++d) {
      if (n % d == 0) best = std::min(best, c[d] + c[n / d]);
    }
    c[n] = best;
  }
  return c;
}

u64 least_prime_factor(u64 n) {
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

// a(1) = 0; a(n) = a(n-1) + 1 for prime n, else min(a(n-1) + 1, a(p) + a(n/p))
// with p the least prime factor.
std::vector<unsigned> factor_method_lpf(u64 N) {
  std::vector<unsigned> a(N + 1, 0);
  for (u64 n = 2; n <= N; ++n) {
    a[n] = a[n - 1] + 1;
    const u64 p = least_prime_factor(n);
    if (p != n) a[n] = std::min(a[n], a[p] + a[n / p]);
  }
  return a;
}

// a(1) = 0; a(n) = min(a(n-1) + 1, min over d | n, 1 < d < n of a(d) + a(n/d)).
std::vector<unsigned> factor_method_best(u64 N) {
  std::vector<unsigned> a(N + 1, 0);
  for (u64 n = 2; n <= N; ++n) {
    a[n] = a[n - 1] + 1;
    for (u64 d = 2; d * d <= n; ++d) {
      if (n % d == 0) a[n] = std::min(a[n], a[d] + a[n / d]);
    }
  }
  return a;
}

void write_bfile(const std::filesystem::path& path, const std::string& header, const std::vector<unsigned>& values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << header;
  for (u64 n = 1; n < values.size(); ++n) out << n << ' ' << values[n] << '\n';
  std::fprintf(stderr, "wrote %s (%zu entries)\n", path.c_str(), values.size() - 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate the sequence fixtures in data/"};
  std::string out_dir = "data";
  u64 max_n = 10000;
  std::string only;
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--max", max_n, "last index written")->check(CLI::Range(u64{2}, u64{100000}));
  app.add_option("--only", only, "regenerate a single file (A003313, A005245, A117497, A117498)");
  CLI11_PARSE(app, argc, argv);

  try {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    const bool all = only.empty();
    if (all || only == "A005245") {
      write_bfile(dir / "b005245.txt",
                  "# A005245: complexity of n, fewest 1's combined with + and *\n"
                  "# regenerated locally by mpc-fixtures\n",
                  integer_complexity(max_n));
    }
    if (all || only == "A117497") {
      write_bfile(dir / "b117497.txt",
                  "# A117497: factor method over the least prime factor, otherwise one n-1 step\n"
                  "# regenerated locally by mpc-fixtures\n",
                  factor_method_lpf(max_n));
    }
    if (all || only == "A117498") {
      write_bfile(dir / "b117498.txt",
                  "# A117498: optimized combination of binary and factor methods\n"
                  "# regenerated locally by mpc-fixtures\n",
                  factor_method_best(max_n));
    }
    if (all || only == "A003313") {
      write_bfile(dir / "b003313.txt",
                  "# A003313: length of a shortest addition chain for n\n"
                  "# regenerated locally by mpc-fixtures (exhaustive search)\n",
                  shortest_chain_lengths(max_n));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

#include "mpc/addition_chain.hpp"

#include "mpc/error.hpp"

namespace mpc {

namespace {

// Two-pointer scan over the ascending prefix entries[0..k).
bool is_pair_sum(std::span<const std::uint64_t> prefix, std::uint64_t target) {
  std::size_t lo = 0;
  std::size_t hi = prefix.size() - 1;
  while (lo <= hi) {
    const std::uint64_t s = prefix[lo] + prefix[hi];
    if (s == target) return true;
    if (s < target) {
      ++lo;
    } else {
      if (hi == 0) break;
      --hi;
    }
  }
  return false;
}

}  // namespace

bool validate_chain(std::span<const std::uint64_t> entries) {
  if (entries.empty() || entries[0] != 1) return false;
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k] <= entries[k - 1]) return false;
    // Entries beyond 2^63 could wrap in the pair sum; no such entry is a
    // double of anything in range anyway.
    if (entries[k - 1] > (UINT64_MAX >> 1)) return false;
    if (!is_pair_sum(entries.first(k), entries[k])) return false;
  }
  return true;
}

AdditionChain::AdditionChain(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {
  if (!validate_chain(entries_)) throw RangeError("not a valid ascending addition chain");
}

std::string render(const AdditionChain& chain) {
  std::string out;
  for (std::uint64_t v : chain.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace mpc

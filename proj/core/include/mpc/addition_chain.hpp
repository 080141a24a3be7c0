#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mpc {

// True iff entries is non-empty, starts at 1, is strictly increasing, and
// every entry after the first is the sum of two (not necessarily distinct)
// earlier entries.
bool validate_chain(std::span<const std::uint64_t> entries);

// An ascending addition chain (1 = a_0 < a_1 < ... < a_r). Construction
// validates; an invalid tuple throws RangeError.
class AdditionChain {
 public:
  explicit AdditionChain(std::vector<std::uint64_t> entries);

  std::span<const std::uint64_t> entries() const noexcept { return entries_; }
  // Number of entries minus one.
  std::size_t length() const noexcept { return entries_.size() - 1; }
  std::uint64_t target() const noexcept { return entries_.back(); }

  friend bool operator==(const AdditionChain&, const AdditionChain&) = default;

 private:
  std::vector<std::uint64_t> entries_;
};

// Space-separated entries, e.g. "1 2 4 5 10 20".
std::string render(const AdditionChain& chain);

}  // namespace mpc

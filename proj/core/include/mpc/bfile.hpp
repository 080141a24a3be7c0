#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mpc {

struct BFileEntry {
  std::int64_t index = 0;
  std::uint64_t value = 0;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

// An OEIS b-file: (index, value) pairs with strictly increasing indices.
// Lookups are always by absolute index, never by position, since offsets
// differ between sequences.
class BFileSequence {
 public:
  BFileSequence() = default;
  // Throws FormatError unless indices strictly increase.
  BFileSequence(std::string source_name, std::vector<BFileEntry> entries);

  const std::string& source_name() const noexcept { return source_name_; }
  std::span<const BFileEntry> entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::int64_t first_index() const;
  std::int64_t last_index() const;

  std::optional<std::uint64_t> at(std::int64_t index) const;
  // True iff every index in [first, last] is present.
  bool covers(std::int64_t first, std::int64_t last) const;

  friend bool operator==(const BFileSequence&, const BFileSequence&) = default;

 private:
  std::string source_name_;
  std::vector<BFileEntry> entries_;
};

// Lines are blank, `#` comments, or "index value" separated by whitespace.
// Throws FormatError (with the 1-based line number) on a malformed line, a
// negative value, or a non-increasing index.
BFileSequence parse_bfile(std::string_view text, std::string source_name = {});

// Reads and parses a file; the source name defaults to the file stem.
BFileSequence load_bfile(const std::filesystem::path& path);

// "# <source_name>" header when the name is non-empty, then "index value"
// lines terminated by '\n'.
std::string render_bfile(const BFileSequence& sequence);

}  // namespace mpc

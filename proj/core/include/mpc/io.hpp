#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

#include "mpc/analysis.hpp"
#include "mpc/complexity.hpp"

namespace mpc {

// Table CSV:
//   m=<m>,N=<N>
//   n,value,split_kind,split_arg        (one row per n = 1..N)
// split_kind is B, S or F. Round trips bit-exactly.
void write_table(const ComplexityTable& table, std::ostream& out);
void save_table(const ComplexityTable& table, const std::filesystem::path& path);

// Throws FormatError on a bad header, a malformed or missing row, or rows
// inconsistent with their splits; RangeError when expected_m is given and
// differs from the stored base.
ComplexityTable read_table(std::istream& in, std::optional<std::uint64_t> expected_m = std::nullopt);
ComplexityTable load_table(const std::filesystem::path& path, std::optional<std::uint64_t> expected_m = std::nullopt);

enum class RowFormat { Csv, Json };

// Throws RangeError for anything other than "csv" or "json".
RowFormat parse_row_format(std::string_view name);

// CSV: header "n,complexity,ell,diff" then one line per row.
// JSON: an array of {"n", "complexity", "ell", "diff"} objects.
// Both end with '\n'.
void write_rows(std::span<const ComparisonRow> rows, RowFormat format, std::ostream& out);
// Throws Error when the path cannot be written.
void export_rows(std::span<const ComparisonRow> rows, RowFormat format, const std::filesystem::path& path);

}  // namespace mpc

#include "mpc/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mpc/error.hpp"

namespace mpc {

void write_table(const ComplexityTable& table, std::ostream& out) {
  out << "m=" << table.base() << ",N=" << table.limit() << '\n';
  for (std::uint64_t n = 1; n <= table.limit(); ++n) {
    const Split s = table.split(n);
    out << n << ',' << table.value(n) << ',' << static_cast<char>(s.kind) << ',' << s.arg << '\n';
  }
}

void save_table(const ComplexityTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write table file " + path.string());
  write_table(table, out);
  if (!out) throw Error("failed writing table file " + path.string());
}

namespace {

bool parse_u64(std::string_view s, std::uint64_t& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = line.find(',');
    out.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

ComplexityTable read_table(std::istream& in, std::optional<std::uint64_t> expected_m) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("missing header", 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const auto header = split_commas(line);
  std::uint64_t m = 0;
  std::uint64_t N = 0;
  if (header.size() != 2 || !header[0].starts_with("m=") || !header[1].starts_with("N=") ||
      !parse_u64(header[0].substr(2), m) || !parse_u64(header[1].substr(2), N)) {
    throw FormatError("header must be 'm=<m>,N=<N>'", 1);
  }
  if (expected_m && *expected_m != m) {
    throw RangeError("table file has m=" + std::to_string(m) + ", expected m=" + std::to_string(*expected_m));
  }
  if (N < 1 || N > kMaxTableLimit) throw FormatError("table limit out of range", 1);

  std::vector<std::uint16_t> values(N + 1, 0);
  std::vector<Split> splits(N + 1);
  for (std::uint64_t n = 1; n <= N; ++n) {
    const std::size_t line_no = static_cast<std::size_t>(n + 1);
    if (!std::getline(in, line)) throw FormatError("truncated table: expected row for n=" + std::to_string(n), line_no);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_commas(line);
    std::uint64_t row_n = 0;
    std::uint64_t value = 0;
    std::uint64_t arg = 0;
    if (fields.size() != 4 || !parse_u64(fields[0], row_n) || !parse_u64(fields[1], value) ||
        fields[2].size() != 1 || !parse_u64(fields[3], arg)) {
      throw FormatError("expected 'n,value,split_kind,split_arg'", line_no);
    }
    if (row_n != n) throw FormatError("expected row for n=" + std::to_string(n), line_no);
    if (value > std::numeric_limits<std::uint16_t>::max() || arg > std::numeric_limits<std::uint32_t>::max()) {
      throw FormatError("field out of range", line_no);
    }
    const char kind = fields[2][0];
    if (kind != 'B' && kind != 'S' && kind != 'F') throw FormatError("split_kind must be B, S or F", line_no);
    values[n] = static_cast<std::uint16_t>(value);
    splits[n] = Split{static_cast<SplitKind>(kind), static_cast<std::uint32_t>(arg)};
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line != "\r") throw FormatError("trailing data after row N", 0);
  }
  return ComplexityTable::from_parts(m, std::move(values), std::move(splits));
}

ComplexityTable load_table(const std::filesystem::path& path, std::optional<std::uint64_t> expected_m) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open table file " + path.string());
  return read_table(in, expected_m);
}

RowFormat parse_row_format(std::string_view name) {
  if (name == "csv") return RowFormat::Csv;
  if (name == "json") return RowFormat::Json;
  throw RangeError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

void write_rows(std::span<const ComparisonRow> rows, RowFormat format, std::ostream& out) {
  if (format == RowFormat::Csv) {
    out << "n,complexity,ell,diff\n";
    for (const ComparisonRow& r : rows) out << r.n << ',' << r.complexity << ',' << r.ell << ',' << r.diff << '\n';
    return;
  }
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const ComparisonRow& r : rows) {
    doc.push_back({{"n", r.n}, {"complexity", r.complexity}, {"ell", r.ell}, {"diff", r.diff}});
  }
  out << doc.dump(2) << '\n';
}

void export_rows(std::span<const ComparisonRow> rows, RowFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_rows(rows, format, out);
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace mpc

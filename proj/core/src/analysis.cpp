#include "mpc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mpc/error.hpp"

namespace mpc {

EllSource EllSource::solver(ChainSearchConfig config) { return EllSource(config); }

EllSource EllSource::fixture(BFileSequence sequence) { return EllSource(std::move(sequence)); }

std::string EllSource::describe() const {
  if (const auto* seq = std::get_if<BFileSequence>(&impl_)) return "bfile:" + seq->source_name();
  return "solver";
}

bool EllSource::covers(std::uint64_t first, std::uint64_t last) const {
  if (const auto* seq = std::get_if<BFileSequence>(&impl_)) {
    return seq->covers(static_cast<std::int64_t>(first), static_cast<std::int64_t>(last));
  }
  return first >= 1;
}

unsigned EllSource::ell(std::uint64_t n) const {
  if (const auto* seq = std::get_if<BFileSequence>(&impl_)) {
    const auto v = seq->at(static_cast<std::int64_t>(n));
    if (!v) throw RangeError("ell source " + describe() + " has no entry for n=" + std::to_string(n));
    return static_cast<unsigned>(*v);
  }
  return mpc::ell(n, std::get<ChainSearchConfig>(impl_));
}

namespace {

void require_binary(const ComplexityTable& table) {
  if (table.base() != 2) throw RangeError("analysis needs an m=2 table, got m=" + std::to_string(table.base()));
}

void require_sources(const ComplexityTable& table, const EllSource& source, std::uint64_t N) {
  require_binary(table);
  if (N > table.limit()) {
    throw RangeError("N=" + std::to_string(N) + " beyond table limit " + std::to_string(table.limit()));
  }
  if (N >= 2 && !source.covers(2, N)) {
    throw RangeError("ell source " + source.describe() + " does not cover [2, " + std::to_string(N) + "]");
  }
}

}  // namespace

std::vector<ComparisonRow> comparison_rows(const ComplexityTable& table, const EllSource& ell_source,
                                           std::uint64_t N) {
  require_sources(table, ell_source, N);
  std::vector<ComparisonRow> rows;
  for (std::uint64_t n = 2; n <= N; ++n) {
    const auto c = static_cast<std::int64_t>(table.value(n));
    const auto l = static_cast<std::int64_t>(ell_source.ell(n));
    rows.push_back({n, c, l, c - l});
  }
  return rows;
}

std::vector<std::uint64_t> discrepancy_indices(const ComplexityTable& table, const EllSource& ell_source,
                                               std::uint64_t N) {
  std::vector<std::uint64_t> out;
  for (const ComparisonRow& row : comparison_rows(table, ell_source, N)) {
    if (row.diff != 0) out.push_back(row.n);
  }
  return out;
}

DiffDistribution diff_distribution(const ComplexityTable& table, const EllSource& ell_source, std::uint64_t N) {
  DiffDistribution dist;
  dist.ell_source = ell_source.describe();
  dist.last = N;
  for (const ComparisonRow& row : comparison_rows(table, ell_source, N)) {
    ++dist.counts[row.diff];
    if (row.diff < 0) dist.negative.push_back(row.n);
  }
  return dist;
}

ConjectureCheckReport check_brauer_analogue(const ComplexityTable& table, unsigned r, unsigned s,
                                            std::uint64_t check_cap) {
  require_binary(table);
  if (r < 1) throw RangeError("r must be a positive integer");
  if (r == 1 && s == 0) throw RangeError("the pair r = 1, s = 0 is excluded");
  if (r >= 63 || static_cast<std::uint64_t>(r) * s >= 63) throw RangeError("2^(r s) beyond 64-bit range");

  ConjectureCheckReport report;
  report.r = r;
  report.s = s;
  report.interval_first = std::uint64_t{1} << (r * s);
  const std::uint64_t top_exp = static_cast<std::uint64_t>(r) * (s + 1);
  report.interval_end = top_exp >= 64 ? UINT64_MAX : std::uint64_t{1} << top_exp;
  report.bound = static_cast<std::uint64_t>(r + 1) * s + (std::uint64_t{1} << r) - 2;

  report.checked_end = std::min({report.interval_end, check_cap, table.limit() + 1});
  report.partial = report.checked_end < report.interval_end;
  for (std::uint64_t n = report.interval_first; n < report.checked_end; ++n) {
    const unsigned v = table.value(n);
    if (v > report.max_complexity) {
      report.max_complexity = v;
      report.argmax = n;
    }
    if (v > report.bound && !report.first_violation) report.first_violation = n;
  }
  report.pass = report.max_complexity <= report.bound;
  return report;
}

double binary_defect(const ComplexityTable& table, std::uint64_t n) {
  require_binary(table);
  return static_cast<double>(complexity(table, n)) - std::log2(static_cast<double>(n));
}

double classic_defect(const ComplexityTable& table, std::uint64_t n) {
  if (table.base() != 1) throw RangeError("classic defect needs an m=1 table");
  const double v = static_cast<double>(complexity(table, n));
  return v - 3.0 * (std::log(static_cast<double>(n)) / std::log(3.0));
}

SequenceComparison compare_with_sequence(const BFileSequence& values, const BFileSequence& reference,
                                         std::int64_t first, std::int64_t last) {
  if (values.empty() || reference.empty()) throw RangeError("cannot compare an empty sequence");
  SequenceComparison out;
  out.left_name = values.source_name();
  out.right_name = reference.source_name();
  out.first = std::max({first, values.first_index(), reference.first_index()});
  out.last = std::min({last, values.last_index(), reference.last_index()});

  for (const BFileEntry& e : values.entries()) {
    if (e.index < out.first || e.index > out.last) continue;
    const auto other = reference.at(e.index);
    if (!other) continue;
    const auto a = static_cast<std::int64_t>(e.value);
    const auto b = static_cast<std::int64_t>(*other);
    out.rows.push_back({static_cast<std::uint64_t>(e.index), a, b, a - b});
    if (a != b && !out.first_disagreement) out.first_disagreement = e.index;
  }
  if (out.rows.empty()) {
    throw RangeError("sequences " + out.left_name + " and " + out.right_name + " share no index in range");
  }
  return out;
}

BFileSequence table_sequence(const ComplexityTable& table, std::string name) {
  std::vector<BFileEntry> entries;
  entries.reserve(table.limit());
  for (std::uint64_t n = 1; n <= table.limit(); ++n) {
    entries.push_back({static_cast<std::int64_t>(n), table.value(n)});
  }
  return BFileSequence(std::move(name), std::move(entries));
}

std::vector<std::uint64_t> search_log2np1_counterexamples(const ComplexityTable& table, std::uint64_t N) {
  require_binary(table);
  if (N > table.limit()) throw RangeError("N beyond table limit");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const unsigned v = table.value(n);
    // v < log2(n+1)  <=>  2^v < n+1  <=>  2^v <= n
    if (v < 64 && (std::uint64_t{1} << v) <= n) out.push_back(n);
  }
  return out;
}

}  // namespace mpc

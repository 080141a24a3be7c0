#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mpc/bfile.hpp"
#include "mpc/chain_solver.hpp"
#include "mpc/complexity.hpp"

namespace mpc {

// Where shortest-chain lengths come from: the exact solver, or an ingested
// A003313-style b-file.
class EllSource {
 public:
  static EllSource solver(ChainSearchConfig config = {});
  static EllSource fixture(BFileSequence sequence);

  // "solver" or "bfile:<source name>"; recorded in analysis reports.
  std::string describe() const;
  bool covers(std::uint64_t first, std::uint64_t last) const;
  // RangeError when a fixture lacks n.
  unsigned ell(std::uint64_t n) const;

 private:
  explicit EllSource(std::variant<ChainSearchConfig, BFileSequence> impl) : impl_(std::move(impl)) {}

  std::variant<ChainSearchConfig, BFileSequence> impl_;
};

struct ComparisonRow {
  std::uint64_t n = 0;
  std::int64_t complexity = 0;
  std::int64_t ell = 0;
  std::int64_t diff = 0;  // complexity - ell

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

// Rows for n = 2..N. The table must be m = 2 and cover N; the source must
// cover [2, N]. RangeError otherwise.
std::vector<ComparisonRow> comparison_rows(const ComplexityTable& table, const EllSource& ell_source,
                                           std::uint64_t N);

// Ascending n in [2, N] where the binary complexity differs from ell(n).
std::vector<std::uint64_t> discrepancy_indices(const ComplexityTable& table, const EllSource& ell_source,
                                               std::uint64_t N);

struct DiffDistribution {
  std::string ell_source;
  std::uint64_t last = 0;
  // difference -> how many n in [2, last] have it
  std::map<std::int64_t, std::uint64_t> counts;
  // n with a negative difference, i.e. ell(n) above the binary complexity.
  std::vector<std::uint64_t> negative;
};

DiffDistribution diff_distribution(const ComplexityTable& table, const EllSource& ell_source, std::uint64_t N);

struct ConjectureCheckReport {
  unsigned r = 0;
  unsigned s = 0;
  std::uint64_t interval_first = 0;  // 2^(r s)
  std::uint64_t interval_end = 0;    // 2^(r (s+1)), exclusive
  std::uint64_t checked_end = 0;     // exclusive end actually scanned
  std::uint64_t bound = 0;           // (r+1) s + 2^r - 2
  unsigned max_complexity = 0;       // 0 when nothing was scanned
  std::uint64_t argmax = 0;
  bool partial = false;  // the cap or table limit truncated the interval
  bool pass = false;
  std::optional<std::uint64_t> first_violation;
};

// Scans [2^(rs), min(2^(r(s+1)), check_cap, N+1)) of an m = 2 table for the
// largest complexity and compares it with (r+1) s + 2^r - 2. r >= 1 and the
// pair (r, s) = (1, 0) is excluded (RangeError).
ConjectureCheckReport check_brauer_analogue(const ComplexityTable& table, unsigned r, unsigned s,
                                            std::uint64_t check_cap);

// v[n] - log2(n) for an m = 2 table.
double binary_defect(const ComplexityTable& table, std::uint64_t n);
// v[n] - 3 log3(n) for an m = 1 table.
double classic_defect(const ComplexityTable& table, std::uint64_t n);

struct SequenceComparison {
  std::string left_name;
  std::string right_name;
  std::int64_t first = 0;
  std::int64_t last = 0;
  std::optional<std::int64_t> first_disagreement;
  // complexity = left value, ell = right value; one row per shared index.
  std::vector<ComparisonRow> rows;
};

// Compares two sequences by absolute index over [first, last] intersected
// with both index ranges; indices missing from either side are skipped.
// RangeError when no index is shared.
SequenceComparison compare_with_sequence(const BFileSequence& values, const BFileSequence& reference,
                                         std::int64_t first, std::int64_t last);

// The table as an indexed sequence over 1..limit().
BFileSequence table_sequence(const ComplexityTable& table, std::string name = {});

// All n <= N with v[n] < log2(n+1), for an m = 2 table.
std::vector<std::uint64_t> search_log2np1_counterexamples(const ComplexityTable& table, std::uint64_t N);

}  // namespace mpc

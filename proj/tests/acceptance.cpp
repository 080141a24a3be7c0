// One line per acceptance criterion: PASS, FAIL, or KNOWN-FAIL when the
// criterion cannot hold and the observed failure is exactly the documented
// one. Exit status is nonzero on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mini_chain_oracle.hpp"
#include "mpc/analysis.hpp"
#include "mpc/chain_solver.hpp"
#include "mpc/complexity.hpp"
#include "mpc/oracle.hpp"
#include "support.hpp"

namespace {

using namespace mpc;
using Clock = std::chrono::steady_clock;

enum class Status { Pass, Fail, KnownFail };

struct Outcome {
  Status status;
  std::string detail;
};

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << "s";
  return out.str();
}

Outcome pass_if(bool ok, std::string detail) { return {ok ? Status::Pass : Status::Fail, std::move(detail)}; }

std::vector<unsigned> compute_rows(std::uint64_t max) {
  std::ostringstream out;
  std::ostringstream err;
  const std::vector<std::string> args{"compute", "--m", "2", "--max", std::to_string(max)};
  if (cli::run(args, out, err) != cli::kExitOk) return {};
  std::vector<unsigned> values(max + 1, 0);
  std::istringstream in(out.str());
  std::uint64_t n = 0;
  unsigned v = 0;
  while (in >> n >> v) {
    if (n <= max) values[n] = v;
  }
  return values;
}

Outcome sequence_reproduction() {
  const auto start = Clock::now();
  const std::vector<unsigned> v = compute_rows(47);
  const double t = seconds_since(start);
  const std::vector<unsigned> from2{1, 2, 2, 3, 3, 4, 3, 4, 4, 5, 4, 5, 5, 5, 4, 5, 5, 6, 5, 6, 6, 7};
  const std::vector<unsigned> from5{3, 3, 4, 3, 4, 4, 5, 4, 5, 5, 5, 4, 5, 5, 6, 5, 6, 6, 7, 5, 6, 6,
                                    6, 6, 7, 6, 7, 5, 6, 6, 7, 6, 7, 7, 7, 6, 7, 7, 8, 7, 7, 8, 8};
  if (v.empty()) return {Status::Fail, "compute failed"};
  bool ok = std::equal(from2.begin(), from2.end(), v.begin() + 2) && std::equal(from5.begin(), from5.end(), v.begin() + 5);
  return pass_if(ok && t < 1.0, "n=2..23 and n=5..47 exact, " + fmt_seconds(t));
}

Outcome discrepancies() {
  const ComplexityTable t = build_table(2, 100);
  const std::vector<std::uint64_t> expected{23, 43, 46, 59, 77, 83};
  auto start = Clock::now();
  const auto solver = discrepancy_indices(t, EllSource::solver(), 100);
  const double t_solver = seconds_since(start);
  start = Clock::now();
  const auto fixture = discrepancy_indices(t, EllSource::fixture(test::fixture("b003313.txt")), 100);
  const double t_fixture = seconds_since(start);
  auto head = [&](const std::vector<std::uint64_t>& d) {
    return d.size() >= 6 && std::equal(expected.begin(), expected.end(), d.begin());
  };
  return pass_if(head(solver) && head(fixture) && t_solver < 10.0 && t_fixture < 1.0,
                 "23 43 46 59 77 83; solver " + fmt_seconds(t_solver) + ", fixture " + fmt_seconds(t_fixture));
}

Outcome key_values() {
  const ComplexityTable t = build_table(2, 10000);
  const BFileSequence mine = table_sequence(t, "binary");
  const auto d497 = compare_with_sequence(mine, test::fixture("b117497.txt"), 2, 10000).first_disagreement;
  const auto d498 = compare_with_sequence(mine, test::fixture("b117498.txt"), 2, 10000).first_disagreement;
  const bool ok = t.value(20) == 5 && t.value(23) == 7 && ell(23) == 6 && t.value(47) == 8 && d497 == 47 &&
                  d498 == 47;
  return pass_if(ok, "|20|=5 |23|=7 ell(23)=6 |47|=8, first disagreement 47 with both factor-method sequences");
}

Outcome two_sided_bounds() {
  const auto start = Clock::now();
  const BoundsReport binary = verify_bounds_binary(build_table(2, 100000), 2, 100000);
  const BoundsReport unary = verify_bounds_unary(build_table(1, 10000), 2, 10000);
  const double t = seconds_since(start);
  return pass_if(binary.ok() && unary.ok() && t < 300.0,
                 std::to_string(binary.violations.size() + unary.violations.size()) + " violations over " +
                     std::to_string(binary.checked) + " + " + std::to_string(unary.checked) + " values, " +
                     fmt_seconds(t));
}

Outcome distribution() {
  const auto start = Clock::now();
  const DiffDistribution d =
      diff_distribution(build_table(2, 10000), EllSource::fixture(test::fixture("b003313.txt")), 10000);
  const double t = seconds_since(start);
  bool support = true;
  std::ostringstream counts;
  for (const auto& [diff, count] : d.counts) {
    support = support && diff >= 0 && diff <= 3;
    counts << " " << diff << ":" << count;
  }
  const bool one_three = d.counts.contains(3) && d.counts.at(3) == 1;
  return pass_if(support && one_three && t < 60.0, "counts" + counts.str() + ", " + fmt_seconds(t));
}

Outcome oracle_equivalence() {
  std::uint64_t mismatches = 0;
  for (std::uint64_t m = 1; m <= 3; ++m) {
    const ComplexityTable t = build_table(m, 200);
    const ReachableSets sets = build_reachable(m, m == 1 ? 23 : 14, 200);
    for (std::uint64_t n = 1; n <= 200; ++n) mismatches += sets.min_tokens(n) != t.value(n);
  }
  const test::MiniChainOracle mini;
  std::uint64_t chain_mismatches = 0;
  for (unsigned n = 1; n <= test::kMiniChainLimit; ++n) chain_mismatches += ell(n) != mini[n];
  const BFileSequence a003313 = test::fixture("b003313.txt");
  std::uint64_t fixture_mismatches = 0;
  for (std::uint64_t n = 1; n <= 1000; ++n) fixture_mismatches += a003313.at(static_cast<std::int64_t>(n)) != ell(n);
  return pass_if(mismatches + chain_mismatches + fixture_mismatches == 0,
                 "oracle/table " + std::to_string(mismatches) + ", chains/enumeration " +
                     std::to_string(chain_mismatches) + ", chains/fixture " + std::to_string(fixture_mismatches) +
                     " mismatches");
}

Outcome conjecture_evidence() {
  constexpr std::uint64_t cap = 1 << 16;
  const ComplexityTable t = build_table(2, cap - 1);
  std::vector<std::string> failures;
  bool only_known = true;
  for (unsigned r = 1; r <= 4; ++r) {
    for (unsigned s = 0; s <= 3; ++s) {
      if (r == 1 && s == 0) continue;
      const ConjectureCheckReport rep = check_brauer_analogue(t, r, s, cap);
      if (rep.pass) continue;
      failures.push_back("(" + std::to_string(r) + "," + std::to_string(s) + ") at n=" +
                         std::to_string(rep.first_violation.value_or(0)) + " value " +
                         std::to_string(rep.max_complexity) + " > " + std::to_string(rep.bound));
      only_known = only_known && r == 2 && s == 2 && rep.first_violation == 59 && rep.max_complexity == 9;
    }
  }
  bool sb = true;
  for (const ScholzBrauerRow& row : scholz_brauer_check(10)) sb = sb && row.pass;

  std::string detail = "scholz-brauer n<=10 " + std::string(sb ? "holds" : "FAILS") + "; ";
  if (failures.empty()) return pass_if(sb, detail + "bound holds on every (r,s)");
  detail += "bound exceeded:";
  for (const std::string& f : failures) detail += " " + f;
  if (sb && only_known && failures.size() == 1) return {Status::KnownFail, detail};
  return {Status::Fail, detail};
}

Outcome witness_soundness() {
  const ComplexityTable t = build_table(2, 10000);
  std::uint64_t bad = 0;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const Expression w = witness(t, n);
    const AdditionChain c = chain_from_expression(w);
    bad += evaluate(w) != n || w.token_count() != t.value(n) || !validate_chain(c.entries()) || c.target() != n;
  }
  return pass_if(bad == 0, std::to_string(bad) + " unsound witnesses in 1..10000");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"sequence reproduction", sequence_reproduction},
      {"discrepancy indices", discrepancies},
      {"key point values", key_values},
      {"two-sided bounds", two_sided_bounds},
      {"distribution claim", distribution},
      {"oracle equivalence", oracle_equivalence},
      {"conjecture evidence", conjecture_evidence},
      {"witness soundness", witness_soundness},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o{Status::Fail, {}};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {Status::Fail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::KnownFail ? "KNOWN-FAIL" : "FAIL";
    std::cout << "[" << tag << "] " << index << " " << name << ": " << o.detail << std::endl;
    failed += o.status == Status::Fail;
  }
  return failed == 0 ? 0 : 1;
}

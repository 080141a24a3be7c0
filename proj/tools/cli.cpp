#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "mpc/analysis.hpp"
#include "mpc/bfile.hpp"
#include "mpc/chain_solver.hpp"
#include "mpc/complexity.hpp"
#include "mpc/error.hpp"
#include "mpc/expression.hpp"
#include "mpc/io.hpp"
#include "mpc/oracle.hpp"

#ifndef MPC_DEFAULT_FIXTURE_DIR
#define MPC_DEFAULT_FIXTURE_DIR "data"
#endif

namespace mpc::cli {

namespace {

// Flag validation failure detected after CLI11 parsing; maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t m = 2;
  std::uint64_t max = 0;
  std::uint64_t min = 2;
  std::uint64_t n = 0;
  std::string ell_source = "solver";
  std::string out_path;
  std::string format;
  std::string expr;
  std::string sequence;
  unsigned k_max = 40;
  unsigned r = 0;
  unsigned s = 0;
  std::uint64_t cap = 65536;
  std::uint64_t budget = ChainSearchConfig{}.node_budget;
  std::int64_t from = 2;
};

std::string fixture_file_name(const std::string& reference) {
  if (reference.size() == 7 && (reference[0] == 'A' || reference[0] == 'a') &&
      std::all_of(reference.begin() + 1, reference.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return "b" + reference.substr(1) + ".txt";
  }
  return reference;
}

BFileSequence load_fixture(const std::string& reference) {
  const std::filesystem::path path = resolve_fixture(reference);
  if (!std::filesystem::exists(path)) throw Error("missing fixture file " + reference);
  return load_bfile(path);
}

EllSource make_ell_source(const std::string& name, std::uint64_t budget) {
  if (name == "solver") return EllSource::solver(ChainSearchConfig{128, budget});
  if (name == "fixture") return EllSource::fixture(load_fixture("A003313"));
  if (name.starts_with("bfile:")) return EllSource::fixture(load_fixture(name.substr(6)));
  throw UsageError("--ell-source must be 'solver', 'fixture' or 'bfile:<path>'");
}

// Writes rows to --out when given, as csv unless --format says otherwise.
void maybe_export(const Options& opt, std::span<const ComparisonRow> rows) {
  if (opt.out_path.empty()) return;
  export_rows(rows, parse_row_format(opt.format.empty() ? "csv" : opt.format), opt.out_path);
}

template <typename F>
void with_output(const Options& opt, std::ostream& out, F&& body) {
  if (opt.out_path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw Error("cannot write " + opt.out_path);
  body(file);
  if (!file) throw Error("failed writing " + opt.out_path);
}

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

int cmd_compute(const Options& opt, std::ostream& out) {
  require(opt.m >= 1, "--m must be at least 1");
  require(opt.max >= 1, "--max must be at least 1");
  const std::string format = opt.format.empty() ? "text" : opt.format;
  require(format == "text" || format == "table", "--format must be text or table");
  const ComplexityTable table = build_table(opt.m, std::max(opt.max, opt.m));
  with_output(opt, out, [&](std::ostream& o) {
    if (format == "table" && table.limit() == opt.max) {
      write_table(table, o);
      return;
    }
    if (format == "table") {
      // Trim to the requested limit so the file header matches its rows.
      std::vector<std::uint16_t> values(table.values().begin(), table.values().begin() + opt.max + 1);
      std::vector<Split> splits;
      for (std::uint64_t n = 0; n <= opt.max; ++n) splits.push_back(table.split(n));
      write_table(ComplexityTable::from_parts(opt.m, std::move(values), std::move(splits)), o);
      return;
    }
    for (std::uint64_t n = 1; n <= opt.max; ++n) o << n << '\t' << table.value(n) << '\n';
  });
  return kExitOk;
}

int cmd_witness(const Options& opt, std::ostream& out) {
  require(opt.m >= 1, "--m must be at least 1");
  require(opt.n >= 1, "--n must be at least 1");
  const ComplexityTable table = build_table(opt.m, std::max(opt.n, opt.m));
  const Expression e = witness(table, opt.n);
  out << "value " << evaluate(e) << '\n';
  out << "tokens " << e.token_count() << '\n';
  out << "expression " << render(e) << '\n';
  return kExitOk;
}

int cmd_chain(const Options& opt, std::ostream& out) {
  if (!opt.expr.empty()) {
    const Expression e = parse(opt.expr, 2);
    const AdditionChain chain = chain_from_expression(e);
    out << "value " << evaluate(e) << '\n';
    out << "tokens " << e.token_count() << '\n';
    out << "length " << chain.length() << '\n';
    out << "chain " << render(chain) << '\n';
    return kExitOk;
  }
  require(opt.n >= 1, "chain needs --n or --expr");
  const AdditionChain chain = shortest_chain(opt.n, ChainSearchConfig{128, opt.budget});
  out << "length " << chain.length() << '\n';
  out << "chain " << render(chain) << '\n';
  return kExitOk;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  require(opt.m >= 1, "--m must be at least 1");
  require(opt.n >= 1, "--n must be at least 1");
  require(opt.k_max >= 1, "--k-max must be at least 1");
  out << "complexity " << oracle_complexity(opt.n, opt.m, opt.k_max) << '\n';
  return kExitOk;
}

int cmd_discrepancies(const Options& opt, std::ostream& out) {
  const std::uint64_t N = opt.max == 0 ? 100 : opt.max;
  require(N >= 2, "--max must be at least 2");
  const EllSource source = make_ell_source(opt.ell_source, opt.budget);
  const ComplexityTable table = build_table(2, N);
  const std::vector<ComparisonRow> rows = comparison_rows(table, source, N);
  out << "# ell-source " << source.describe() << '\n';
  bool first = true;
  std::vector<ComparisonRow> differing;
  for (const ComparisonRow& row : rows) {
    if (row.diff == 0) continue;
    differing.push_back(row);
    out << (first ? "" : " ") << row.n;
    first = false;
  }
  out << '\n';
  maybe_export(opt, differing);
  return kExitOk;
}

int cmd_diff_dist(const Options& opt, std::ostream& out) {
  const std::uint64_t N = opt.max == 0 ? 10000 : opt.max;
  require(N >= 2, "--max must be at least 2");
  const EllSource source = make_ell_source(opt.ell_source, opt.budget);
  const ComplexityTable table = build_table(2, N);
  const std::vector<ComparisonRow> rows = comparison_rows(table, source, N);
  std::map<std::int64_t, std::uint64_t> counts;
  for (const ComparisonRow& row : rows) ++counts[row.diff];
  out << "# ell-source " << source.describe() << '\n';
  out << "# range 2.." << N << '\n';
  for (const auto& [diff, count] : counts) out << diff << '\t' << count << '\n';
  maybe_export(opt, rows);
  return kExitOk;
}

const char* side_name(BoundSide side) { return side == BoundSide::Lower ? "lower" : "upper"; }

int cmd_check_bounds(const Options& opt, std::ostream& out) {
  require(opt.m == 1 || opt.m == 2, "check-bounds supports --m 1 or --m 2");
  const std::uint64_t N = opt.max == 0 ? 10000 : opt.max;
  require(N >= 2, "--max must be at least 2");
  require(opt.min >= 1 && opt.min <= N, "--min must lie in 1..max");
  const ComplexityTable table = build_table(opt.m, N);
  const BoundsReport report =
      opt.m == 2 ? verify_bounds_binary(table, opt.min, N) : verify_bounds_unary(table, opt.min, N);
  out << "m " << opt.m << '\n';
  out << "range " << opt.min << ".." << N << '\n';
  out << "checked " << report.checked << '\n';
  out << "violations " << report.violations.size() << '\n';
  for (const BoundViolation& v : report.violations) {
    out << v.n << '\t' << v.value << '\t' << side_name(v.side) << '\n';
  }
  return report.ok() ? kExitOk : kExitDomainError;
}

int cmd_check_conjecture(const Options& opt, std::ostream& out, bool all) {
  require(opt.cap >= 2, "--cap must be at least 2");
  std::vector<std::pair<unsigned, unsigned>> pairs;
  if (all) {
    for (unsigned r = 1; r <= 4; ++r) {
      for (unsigned s = 0; s <= 3; ++s) {
        if (r != 1 || s != 0) pairs.emplace_back(r, s);
      }
    }
  } else {
    require(opt.r >= 1, "--r must be at least 1");
    pairs.emplace_back(opt.r, opt.s);
  }
  std::uint64_t needed = 2;
  for (const auto& [r, s] : pairs) {
    const std::uint64_t exp = static_cast<std::uint64_t>(r) * (s + 1);
    const std::uint64_t end = exp >= 40 ? opt.cap : std::min(opt.cap, std::uint64_t{1} << exp);
    needed = std::max(needed, end - 1);
  }
  require(needed <= kMaxTableLimit, "--cap too large");
  const ComplexityTable table = build_table(2, needed);

  bool ok = true;
  out << "# r\ts\tfirst\tend\tbound\tmax\tstatus\tcoverage\n";
  for (const auto& [r, s] : pairs) {
    const ConjectureCheckReport rep = check_brauer_analogue(table, r, s, opt.cap);
    ok = ok && rep.pass;
    out << rep.r << '\t' << rep.s << '\t' << rep.interval_first << '\t' << rep.checked_end << '\t' << rep.bound
        << '\t' << rep.max_complexity << '\t' << (rep.pass ? "pass" : "FAIL") << '\t'
        << (rep.partial ? "partial" : "full") << '\n';
  }
  return ok ? kExitOk : kExitDomainError;
}

int cmd_compare(const Options& opt, std::ostream& out) {
  require(!opt.sequence.empty(), "compare needs --sequence");
  const BFileSequence reference = load_fixture(opt.sequence);
  if (reference.empty()) throw Error("sequence " + opt.sequence + " is empty");
  std::uint64_t N = opt.max;
  if (N == 0) N = static_cast<std::uint64_t>(std::max<std::int64_t>(reference.last_index(), 1));
  require(opt.m >= 1, "--m must be at least 1");
  const ComplexityTable table = build_table(opt.m, std::max(N, opt.m));
  const BFileSequence mine = table_sequence(table, "m=" + std::to_string(opt.m));
  const SequenceComparison cmp = compare_with_sequence(mine, reference, opt.from, static_cast<std::int64_t>(N));
  out << "# compared " << cmp.left_name << " with " << cmp.right_name << " over " << cmp.first << ".." << cmp.last
      << '\n';
  if (cmp.first_disagreement) {
    out << "first_disagreement " << *cmp.first_disagreement << '\n';
  } else {
    out << "first_disagreement none\n";
  }
  maybe_export(opt, cmp.rows);
  return kExitOk;
}

int cmd_defects(const Options& opt, std::ostream& out) {
  require(opt.m == 1 || opt.m == 2, "defects supports --m 1 (classic) or --m 2 (binary)");
  const std::uint64_t N = opt.max == 0 ? 100 : opt.max;
  require(N >= 2, "--max must be at least 2");
  const ComplexityTable table = build_table(opt.m, N);
  with_output(opt, out, [&](std::ostream& o) {
    o << std::fixed << std::setprecision(12);
    for (std::uint64_t n = 1; n <= N; ++n) {
      o << n << '\t' << (opt.m == 2 ? binary_defect(table, n) : classic_defect(table, n)) << '\n';
    }
  });
  return kExitOk;
}

int cmd_scholz_brauer(const Options& opt, std::ostream& out) {
  const std::uint64_t n_max = opt.max == 0 ? 10 : opt.max;
  require(n_max >= 1 && n_max <= 62, "--max must lie in 1..62");
  const auto rows = scholz_brauer_check(static_cast<unsigned>(n_max), ChainSearchConfig{128, opt.budget});
  bool ok = true;
  out << "# n\tell(2^n-1)\tn+ell(n)-1\tstatus\n";
  for (const ScholzBrauerRow& row : rows) {
    ok = ok && row.pass;
    out << row.n << '\t' << row.ell_mersenne << '\t' << row.bound << '\t' << (row.pass ? "pass" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitDomainError;
}

int cmd_plot_data(const Options& opt, std::ostream& out) {
  require(opt.m >= 1, "--m must be at least 1");
  const std::uint64_t N = opt.max == 0 ? 1000 : opt.max;
  require(N >= 1, "--max must be at least 1");
  const ComplexityTable unary = build_table(1, N);
  const ComplexityTable mary = build_table(opt.m, std::max(N, opt.m));
  with_output(opt, out, [&](std::ostream& o) {
    for (std::uint64_t n = 1; n <= N; ++n) o << n << '\t' << unary.value(n) << '\t' << mary.value(n) << '\n';
  });
  return kExitOk;
}

}  // namespace

std::filesystem::path resolve_fixture(const std::string& reference) {
  const std::filesystem::path direct(reference);
  if (std::filesystem::exists(direct)) return direct;
  const std::filesystem::path name = std::filesystem::path(fixture_file_name(reference)).filename();
  if (const char* env = std::getenv("MPC_FIXTURE_DIR"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env) / name;
  }
  return std::filesystem::path(MPC_DEFAULT_FIXTURE_DIR) / name;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary and m-ary integer complexity, addition chains and related checks", "mpc"};
  app.require_subcommand(1);
  Options opt;

  auto add_m = [&](CLI::App* sub) { sub->add_option("--m", opt.m, "token base m (tokens 1..m)")->capture_default_str(); };
  auto add_max = [&](CLI::App* sub, const std::string& help) { sub->add_option("--max", opt.max, help); };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out_path, "write results to this file");
    sub->add_option("--format", opt.format, "output format");
  };
  auto add_ell = [&](CLI::App* sub) {
    sub->add_option("--ell-source", opt.ell_source, "solver | fixture | bfile:<path>")->capture_default_str();
    sub->add_option("--budget", opt.budget, "node budget per chain search");
  };

  auto* compute = app.add_subcommand("compute", "complexity values for n = 1..max");
  add_m(compute);
  opt.max = 0;
  add_max(compute, "last n (default 10000)");
  add_out(compute);

  auto* witness_cmd = app.add_subcommand("witness", "a minimal expression for n");
  add_m(witness_cmd);
  witness_cmd->add_option("--n", opt.n, "target")->required();

  auto* chain = app.add_subcommand("chain", "a shortest addition chain for n, or the chain read off --expr");
  chain->add_option("--n", opt.n, "target");
  chain->add_option("--expr", opt.expr, "expression over tokens 1 and 2");
  chain->add_option("--budget", opt.budget, "node budget");

  auto* oracle = app.add_subcommand("oracle", "brute-force complexity of n");
  add_m(oracle);
  oracle->add_option("--n", opt.n, "target")->required();
  oracle->add_option("--k-max", opt.k_max, "largest token count enumerated")->capture_default_str();

  auto* disc = app.add_subcommand("discrepancies", "n in [2, max] where binary complexity differs from ell(n)");
  add_max(disc, "last n (default 100)");
  add_ell(disc);
  add_out(disc);

  auto* dist = app.add_subcommand("diff-dist", "distribution of binary complexity minus ell(n)");
  add_max(dist, "last n (default 10000)");
  add_ell(dist);
  add_out(dist);

  auto* bounds = app.add_subcommand("check-bounds", "two-sided bounds for m = 2 or m = 1");
  add_m(bounds);
  add_max(bounds, "last n (default 10000)");
  bounds->add_option("--min", opt.min, "first n")->capture_default_str();

  auto* conj = app.add_subcommand("check-conjecture", "(r+1)s + 2^r - 2 bound on [2^(rs), 2^(r(s+1)))");
  auto* r_opt = conj->add_option("--r", opt.r, "r >= 1 (omit both --r and --s for the full grid)");
  auto* s_opt = conj->add_option("--s", opt.s, "s >= 0");
  conj->add_option("--cap", opt.cap, "exclusive cap on checked n")->capture_default_str();

  auto* cmp = app.add_subcommand("compare", "first disagreement with a b-file sequence");
  add_m(cmp);
  cmp->add_option("--sequence", opt.sequence, "b-file path or A-number")->required();
  add_max(cmp, "last n (default: end of the sequence)");
  cmp->add_option("--from", opt.from, "first n compared")->capture_default_str();
  add_out(cmp);

  auto* defects = app.add_subcommand("defects", "v[n] - log2 n (m = 2) or v[n] - 3 log3 n (m = 1)");
  add_m(defects);
  add_max(defects, "last n (default 100)");
  defects->add_option("--out", opt.out_path, "write results to this file");

  auto* sb = app.add_subcommand("scholz-brauer", "ell(2^n - 1) <= n + ell(n) - 1 for n = 1..max");
  add_max(sb, "last n (default 10)");
  sb->add_option("--budget", opt.budget, "node budget per chain search");

  auto* plot = app.add_subcommand("plot-data", "rows n, unary complexity, m-ary complexity");
  add_m(plot);
  add_max(plot, "last n (default 1000)");
  plot->add_option("--out", opt.out_path, "write rows to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      if (opt.max == 0) opt.max = 10000;
      return cmd_compute(opt, out);
    }
    if (witness_cmd->parsed()) return cmd_witness(opt, out);
    if (chain->parsed()) return cmd_chain(opt, out);
    if (oracle->parsed()) return cmd_oracle(opt, out);
    if (disc->parsed()) return cmd_discrepancies(opt, out);
    if (dist->parsed()) return cmd_diff_dist(opt, out);
    if (bounds->parsed()) return cmd_check_bounds(opt, out);
    if (conj->parsed()) {
      const bool grid = r_opt->count() == 0 && s_opt->count() == 0;
      if (!grid && r_opt->count() == 0) throw UsageError("--s needs --r");
      return cmd_check_conjecture(opt, out, grid);
    }
    if (cmp->parsed()) return cmd_compare(opt, out);
    if (defects->parsed()) return cmd_defects(opt, out);
    if (sb->parsed()) return cmd_scholz_brauer(opt, out);
    if (plot->parsed()) return cmd_plot_data(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace mpc::cli

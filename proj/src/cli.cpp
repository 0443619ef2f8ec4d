#include "ramanujan/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramanujan/congruence.hpp"
#include "ramanujan/elliptic.hpp"
#include "ramanujan/padic.hpp"
#include "ramanujan/report.hpp"
#include "ramanujan/tau.hpp"

namespace ramanujan {

namespace {

namespace fs = std::filesystem;

// Thrown for bad parameter values discovered after parsing; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t positive(const std::string& flag, std::int64_t value) {
  if (value <= 0) throw UsageError(flag + " must be a positive integer");
  return static_cast<std::uint64_t>(value);
}

// Tables are cached as <dir>/tau-table-<N>.txt when TAU_TABLE_CACHE names a directory.
TauTable load_or_compute_table(std::size_t max_n, std::ostream& err) {
  const char* dir = std::getenv("TAU_TABLE_CACHE");
  if (dir == nullptr || *dir == '\0') return compute_tau_table(max_n);

  const fs::path path = fs::path(dir) / ("tau-table-" + std::to_string(max_n) + ".txt");
  if (fs::exists(path)) {
    std::ifstream in(path);
    try {
      TauTable table = read_tau_table(in);
      if (table.max_n() == max_n) return table;
    } catch (const std::runtime_error& e) {
      err << "warning: ignoring unreadable cache " << path.string() << ": " << e.what() << '\n';
    }
  }
  TauTable table = compute_tau_table(max_n);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  std::ofstream cache(path);
  if (cache) {
    write_tau_table(cache, table);
  } else {
    err << "warning: cannot write cache " << path.string() << '\n';
  }
  return table;
}

struct TauOptions {
  std::int64_t n = 0;
  std::int64_t table = 0;
  std::string out_path;
};

int run_tau(const TauOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.table != 0) {
    const TauTable table = load_or_compute_table(positive("--table", opt.table), err);
    if (opt.out_path.empty()) {
      write_tau_table(out, table);
      return kExitOk;
    }
    std::ofstream file(opt.out_path);
    if (!file) throw UsageError("cannot open " + opt.out_path + " for writing");
    write_tau_table(file, table);
    return kExitOk;
  }
  const std::uint64_t n = positive("n", opt.n);
  out << to_decimal(load_or_compute_table(n, err).at(n)) << '\n';
  return kExitOk;
}

struct VerifyOptions {
  std::string law;
  std::int64_t p_max = 0;
  std::int64_t max_n = 0;
};

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  const std::uint64_t p_max = positive("--pmax", opt.p_max);
  std::uint64_t max_n = p_max;
  if (opt.law == "eigenform") max_n = std::max<std::uint64_t>(p_max, 1000);
  if (opt.max_n != 0) max_n = positive("--max-n", opt.max_n);
  if (max_n < p_max) throw UsageError("--max-n must cover --pmax");

  const TauTable table = load_or_compute_table(max_n, err);
  VerificationReport report;
  if (opt.law == "conjecture-one") {
    report = verify_conjecture_one(table);
  } else if (opt.law == "deligne") {
    report = verify_deligne_bound(table);
  } else if (opt.law == "eigenform") {
    report = verify_eigenform(table, p_max);
  } else {
    const std::map<std::string, CongruenceLaw> laws{{"congruence-691", law_mod_691()},
                                                    {"congruence-32", law_mod_32()},
                                                    {"congruence-3", law_mod_3()}};
    report = verify_congruence(laws.at(opt.law), table);
  }
  if (opt.law != "conjecture-one" && opt.law != "eigenform") {
    std::erase_if(report, [&](const VerificationRecord& r) { return r.param("p") > p_max; });
  }

  out << to_json_lines(report);
  const std::size_t failures = count_failures(report);
  err << opt.law << ": " << report.size() << " records, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitVerificationFailed;
}

struct LocalOptions {
  std::int64_t p = 0;
  std::string poly;
  std::string value;
  std::string start;
  std::int64_t precision = 0;
  std::int64_t witness_precision = 0;
};

IntPolynomial parse_poly(const std::string& text) {
  try {
    return IntPolynomial::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
}

int run_local_roots(const LocalOptions& opt, std::ostream& out) {
  const auto p = positive("--p", opt.p);
  const auto effort = static_cast<unsigned>(positive("--precision", opt.precision));
  std::optional<unsigned> witness;
  if (opt.witness_precision != 0) witness = static_cast<unsigned>(positive("--witness-precision", opt.witness_precision));
  const auto cert = has_root_in_zp(parse_poly(opt.poly), p, effort, witness);
  out << to_json(cert) << '\n';
  return cert.verdict == RootVerdict::inconclusive ? kExitInconclusive : kExitOk;
}

int run_local_square(const LocalOptions& opt, std::ostream& out) {
  const auto p = positive("--p", opt.p);
  const auto precision = static_cast<unsigned>(positive("--precision", opt.precision));
  Rational value;
  try {
    value = parse_rational(opt.value);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--value: ") + e.what());
  }
  out << to_json(is_square_in_qp(value, p, precision)) << '\n';
  return kExitOk;
}

int run_local_hensel(const LocalOptions& opt, std::ostream& out) {
  const auto p = positive("--p", opt.p);
  const auto precision = static_cast<unsigned>(positive("--precision", opt.precision));
  const IntPolynomial f = parse_poly(opt.poly);
  Integer start;
  try {
    start = parse_integer(opt.start);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--start: ") + e.what());
  }
  const Integer root = hensel_lift(f, p, start, precision);
  nlohmann::ordered_json j;
  j["kind"] = "hensel-lift";
  j["p"] = std::to_string(p);
  j["poly"] = f.to_string();
  j["start"] = to_decimal(start);
  j["precision"] = precision;
  j["root"] = to_decimal(root);
  out << j.dump() << '\n';
  return kExitOk;
}

int run_local_integral(const LocalOptions& opt, std::ostream& out) {
  const auto cert = monic_root_in_qp_reduces_to_zp(parse_poly(opt.poly), positive("--p", opt.p));
  out << to_json(cert) << '\n';
  return cert.valid ? kExitOk : kExitVerificationFailed;
}

struct CurveOptions {
  std::string a;
  std::string b;
  std::int64_t p_max = 0;
};

int run_curve(const CurveOptions& opt, std::ostream& out) {
  Integer a, b;
  try {
    a = parse_integer(opt.a);
    b = parse_integer(opt.b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--a/--b: ") + e.what());
  }
  const CurveSpec curve(a, b);
  bool all_within_bound = true;
  for (const auto& record : ap_sweep(curve, positive("--pmax", opt.p_max))) {
    out << to_json(record) << '\n';
    all_within_bound = all_within_bound && record.within_hasse_bound();
  }
  return all_within_bound ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramanujan tau function, Hecke and congruence checks, and local (p-adic) tools"};
  app.require_subcommand(1);

  TauOptions tau_opt;
  auto* tau = app.add_subcommand("tau", "Print tau(n), or write a tau table");
  tau->add_option("n", tau_opt.n, "Index n >= 1");
  tau->add_option("--table", tau_opt.table, "Write tau(1..N)");
  tau->add_option("--out", tau_opt.out_path, "Table output path (default: standard output)");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Check a law over a prime range, JSON lines on stdout");
  verify->add_option("law", verify_opt.law, "Law to check")
      ->required()
      ->check(CLI::IsMember({"conjecture-one", "deligne", "eigenform", "congruence-691", "congruence-32",
                             "congruence-3"}));
  verify->add_option("--pmax", verify_opt.p_max, "Largest prime (or index bound) to check")->required();
  verify->add_option("--max-n", verify_opt.max_n, "Size of the tau table (default: --pmax; eigenform: max(--pmax, 1000))");

  LocalOptions local_opt;
  auto* local = app.add_subcommand("local", "Local (p-adic) certificates");
  local->require_subcommand(1);
  auto* roots = local->add_subcommand("roots", "Does f have a root in Z_p?");
  roots->add_option("--p", local_opt.p)->required();
  roots->add_option("--poly", local_opt.poly, "Coefficients, constant term first")->required();
  roots->add_option("--precision", local_opt.precision, "Effort bound K")->required();
  roots->add_option("--witness-precision", local_opt.witness_precision, "Precision of the lifted witness (default K)");
  auto* square = local->add_subcommand("square", "Is a a square in Q_p?");
  square->add_option("--p", local_opt.p)->required();
  square->add_option("--value", local_opt.value, "Nonzero rational, a or a/b")->required();
  square->add_option("--precision", local_opt.precision, "Witness precision")->default_val(10);
  auto* hensel = local->add_subcommand("hensel", "Lift a simple root mod p to mod p^k");
  hensel->add_option("--p", local_opt.p)->required();
  hensel->add_option("--poly", local_opt.poly, "Coefficients, constant term first")->required();
  hensel->add_option("--start", local_opt.start, "Root mod p")->required();
  hensel->add_option("--precision", local_opt.precision, "Target precision k")->required();
  auto* integral = local->add_subcommand("integral", "Certificate that Q_p-roots of a monic f lie in Z_p");
  integral->add_option("--p", local_opt.p)->required();
  integral->add_option("--poly", local_opt.poly, "Monic polynomial coefficients")->required();

  CurveOptions curve_opt;
  auto* curve = app.add_subcommand("curve", "Reduce y^2 = x^3 + ax + b modulo every prime <= pmax");
  curve->add_option("--a", curve_opt.a)->required();
  curve->add_option("--b", curve_opt.b)->required();
  curve->add_option("--pmax", curve_opt.p_max)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tau) {
      if ((tau_opt.n != 0) == (tau_opt.table != 0)) throw UsageError("tau: give either n or --table N");
      return run_tau(tau_opt, out, err);
    }
    if (*verify) return run_verify(verify_opt, out, err);
    if (*roots) return run_local_roots(local_opt, out);
    if (*square) return run_local_square(local_opt, out);
    if (*hensel) return run_local_hensel(local_opt, out);
    if (*integral) return run_local_integral(local_opt, out);
    if (*curve) return run_curve(curve_opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EnumerationBudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ramanujan

#include "ramanujan/tau.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ramanujan/primes.hpp"
#include "ramanujan/series.hpp"

namespace ramanujan {

namespace {

// Shift prod(...) by one power of q: tau(n) is the coefficient of q^(n-1).
TauTable shifted_table(const TruncatedSeries& product, std::size_t max_n) {
  std::vector<Integer> values(product.coefficients().begin(), product.coefficients().begin() + max_n);
  return TauTable(std::move(values));
}

void require_prime(std::uint64_t p, const char* where) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(where) + ": " + std::to_string(p) + " is not prime");
}

}  // namespace

const Integer& QExpansion::at(std::size_t n) const {
  if (n == 0 || n > values_.size()) {
    throw std::out_of_range("coefficient a(" + std::to_string(n) + ") outside 1.." + std::to_string(values_.size()));
  }
  return values_[n - 1];
}

TauTable::TauTable(std::vector<Integer> values) : expansion_(std::move(values)) {
  if (expansion_.max_n() == 0) throw std::invalid_argument("TauTable: empty table");
  if (expansion_.at(1) != 1) throw std::invalid_argument("TauTable: tau(1) must be 1");
}

WeightLevel::WeightLevel(unsigned weight, unsigned level) : weight_(weight), level_(level) {
  if (weight == 0 || weight % 2 != 0) throw std::invalid_argument("weight must be a positive even integer");
  if (level != 1) throw std::invalid_argument("only level 1 is supported");
}

HeckePolynomial HeckePolynomial::for_prime(const TauTable& table, std::uint64_t p, const WeightLevel& wl) {
  require_prime(p, "HeckePolynomial");
  return {p, table.at(p), ipow(p, wl.weight() - 1)};
}

MobiusMatrix::MobiusMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (a * d - b * c != 1) throw std::invalid_argument("MobiusMatrix: determinant must be 1");
}

MobiusMatrix operator*(const MobiusMatrix& x, const MobiusMatrix& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

TauTable compute_tau_table(std::size_t max_n) {
  if (max_n == 0) throw std::invalid_argument("compute_tau_table: max_n must be at least 1");
  return shifted_table(eta_power_product(24, std::max<std::size_t>(max_n - 1, 1)), max_n);
}

TauTable tau_table_via_cube(std::size_t max_n) {
  if (max_n == 0) throw std::invalid_argument("tau_table_via_cube: max_n must be at least 1");
  return shifted_table(pow(eta_power_product(3, std::max<std::size_t>(max_n - 1, 1)), 8), max_n);
}

Integer tau_extended(std::uint64_t n, const TauTable& table) {
  if (n == 0) throw std::invalid_argument("tau_extended: n must be positive");
  Integer result = 1;
  for (const auto& [p, alpha] : factorize(n)) {
    if (p > table.max_n()) {
      throw std::out_of_range("tau_extended: prime " + std::to_string(p) + " beyond table range " +
                              std::to_string(table.max_n()));
    }
    const Integer norm = ipow(p, 11);
    Integer prev = 1;            // tau(p^0)
    Integer cur = table.at(p);   // tau(p^1)
    for (unsigned k = 1; k < alpha; ++k) {
      Integer next = table.at(p) * cur - norm * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    result *= cur;
  }
  return result;
}

VerificationReport verify_conjecture_one(const TauTable& table) {
  const std::size_t max_n = table.max_n();
  VerificationReport report;
  for (std::size_t m = 1; m * m <= max_n; ++m) {
    for (std::size_t n = m; m * n <= max_n; ++n) {
      if (std::gcd(m, n) != 1) continue;
      report.push_back(make_record("multiplicativity", {{"m", Integer(m)}, {"n", Integer(n)}}, table.at(m * n),
                                   table.at(m) * table.at(n), Relation::equal));
    }
  }
  for (std::uint64_t p : primes_up_to(max_n)) {
    if (p > max_n / p) break;
    const Integer norm = ipow(p, 11);
    // p^alpha, p^(alpha+1), p^(alpha+2)
    std::size_t low = 1, mid = p, high = p * p;
    for (unsigned alpha = 0;; ++alpha) {
      report.push_back(make_record("prime-power-recursion", {{"p", Integer(p)}, {"alpha", Integer(alpha)}},
                                   table.at(high), table.at(p) * table.at(mid) - norm * table.at(low),
                                   Relation::equal));
      if (high > max_n / p) break;
      low = mid;
      mid = high;
      high *= p;
    }
  }
  return report;
}

VerificationReport verify_deligne_bound(const TauTable& table) {
  VerificationReport report;
  for (std::uint64_t p : primes_up_to(table.max_n())) {
    const auto poly = HeckePolynomial::for_prime(table, p);
    report.push_back(make_record("deligne", {{"p", Integer(p)}}, poly.trace * poly.trace, 4 * poly.norm,
                                 Relation::less));
    report.push_back(make_record("hecke-discriminant", {{"p", Integer(p)}}, poly.discriminant(), Integer(0),
                                 Relation::less));
  }
  return report;
}

QExpansion hecke_apply(const QExpansion& f, std::uint64_t p, const WeightLevel& wl) {
  require_prime(p, "hecke_apply");
  const std::size_t out_n = f.max_n() / p;
  const Integer scale = ipow(p, wl.weight() - 1);
  std::vector<Integer> out(out_n);
  for (std::size_t n = 1; n <= out_n; ++n) {
    out[n - 1] = f.at(p * n);
    if (n % p == 0) out[n - 1] += scale * f.at(n / p);
  }
  return QExpansion(std::move(out));
}

VerificationReport verify_eigenform(const TauTable& table, std::uint64_t p_max) {
  VerificationReport report;
  for (std::uint64_t p : primes_up_to(std::min<std::uint64_t>(p_max, table.max_n()))) {
    const QExpansion image = hecke_apply(table.expansion(), p);
    for (std::size_t n = 1; n <= image.max_n(); ++n) {
      report.push_back(make_record("eigenform", {{"p", Integer(p)}, {"n", Integer(n)}}, image.at(n),
                                   table.at(p) * table.at(n), Relation::equal));
    }
  }
  return report;
}

std::complex<double> mobius_act(const MobiusMatrix& g, std::complex<double> z) {
  if (!(z.imag() > 0)) throw std::domain_error("mobius_act: z must lie in the upper half-plane");
  const double a = static_cast<double>(g.a()), b = static_cast<double>(g.b());
  const double c = static_cast<double>(g.c()), d = static_cast<double>(g.d());
  return (a * z + b) / (c * z + d);
}

std::size_t delta_terms_required(double imag) {
  if (!(imag > 0)) throw std::domain_error("delta_terms_required: imaginary part must be positive");
  // |q|^N = exp(-2 pi N y) < 1e-18
  const double bound = 18.0 * std::numbers::ln10 / (2.0 * std::numbers::pi * imag);
  return static_cast<std::size_t>(std::floor(bound)) + 1;
}

std::complex<double> evaluate_delta(std::complex<double> z, const TauTable& table) {
  if (!(z.imag() >= kDeltaImagFloor)) {
    throw std::domain_error("evaluate_delta: Im z = " + std::to_string(z.imag()) + " below the floor 0.3");
  }
  if (table.max_n() < delta_terms_required(z.imag())) {
    throw std::domain_error("evaluate_delta: table of " + std::to_string(table.max_n()) +
                            " terms is too short for Im z = " + std::to_string(z.imag()));
  }
  const std::complex<double> q = std::exp(2.0 * std::numbers::pi * std::complex<double>(0.0, 1.0) * z);
  // Horner from the top keeps the small tail terms from being swamped early.
  std::complex<double> acc = 0.0;
  for (std::size_t n = table.max_n(); n >= 1; --n) acc = acc * q + table.at(n).get_d();
  return acc * q;
}

void write_tau_table(std::ostream& out, const TauTable& table) {
  out << "# tau-table max_n=" << table.max_n() << '\n';
  for (std::size_t n = 1; n <= table.max_n(); ++n) out << n << '\t' << to_decimal(table.at(n)) << '\n';
}

TauTable read_tau_table(std::istream& in) {
  const std::string prefix = "# tau-table max_n=";
  std::string line;
  if (!std::getline(in, line) || line.rfind(prefix, 0) != 0) {
    throw std::runtime_error("tau table: missing '# tau-table max_n=' header");
  }
  std::size_t max_n = 0;
  try {
    const Integer parsed = parse_integer(line.substr(prefix.size()));
    if (parsed <= 0 || !parsed.fits_ulong_p()) throw std::invalid_argument("range");
    max_n = parsed.get_ui();
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("tau table: bad max_n in header '" + line + "'");
  }
  std::vector<Integer> values;
  values.reserve(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (!std::getline(in, line)) throw std::runtime_error("tau table: truncated at entry " + std::to_string(n));
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.substr(0, tab) != std::to_string(n)) {
      throw std::runtime_error("tau table: expected entry " + std::to_string(n) + ", got '" + line + "'");
    }
    try {
      values.push_back(parse_integer(std::string_view(line).substr(tab + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("tau table: ") + e.what());
    }
  }
  if (std::getline(in, line) && !line.empty()) throw std::runtime_error("tau table: trailing data after entry " + std::to_string(max_n));
  try {
    return TauTable(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("tau table: ") + e.what());
  }
}

}  // namespace ramanujan

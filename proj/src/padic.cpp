#include "ramanujan/padic.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "ramanujan/primes.hpp"

namespace ramanujan {

namespace {

using nlohmann::ordered_json;

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

// v_p of a nonzero integer.
std::int64_t valuation_of(const Integer& x, std::uint64_t p) {
  Integer rest;
  const Integer prime(p);
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

// Newton iteration from a residue `a` with v(f(a)) > 2 delta, delta = v(f'(a)),
// until f(a) = 0 mod p^target. Works modulo p^(target + delta); every step at
// least doubles v(f(a)) - 2 delta, and a stays congruent to its start mod p.
Integer newton_lift(const IntPolynomial& f, std::uint64_t p, Integer a, std::int64_t delta, unsigned target) {
  const Integer p_target = ipow(p, target);
  const Integer p_work = ipow(p, target + static_cast<std::uint64_t>(delta));
  const Integer p_delta = ipow(p, static_cast<std::uint64_t>(delta));
  a = residue(a, p_work);
  for (;;) {
    const Integer fa = f(a);
    if (fa == 0 || valuation_of(fa, p) >= static_cast<std::int64_t>(target)) break;
    Integer scaled_value, scaled_slope;
    mpz_divexact(scaled_value.get_mpz_t(), fa.get_mpz_t(), p_delta.get_mpz_t());
    const Integer slope = f.derivative_at(a);
    mpz_divexact(scaled_slope.get_mpz_t(), slope.get_mpz_t(), p_delta.get_mpz_t());
    const Integer step = residue(scaled_value * inverse_mod(scaled_slope, p_work), p_work);
    a = residue(a - step, p_work);
  }
  return residue(a, p_target);
}

// Some square root of a quadratic residue n mod an odd prime p.
Integer tonelli_shanks(const Integer& n, std::uint64_t p) {
  const Integer P(p);
  const Integer a = residue(n, P);
  if (a == 0) return 0;
  Integer r;
  if (p % 4 == 3) {
    const Integer e = (P + 1) / 4;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), P.get_mpz_t());
    return r;
  }
  std::uint64_t s = 0;
  Integer q = P - 1;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), P.get_mpz_t()) != -1) ++z;
  Integer c, t, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), P.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), P.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), P.get_mpz_t());
  std::uint64_t m = s;
  while (t != 1) {
    std::uint64_t i = 0;
    Integer t2 = t;
    while (t2 != 1) {
      t2 = residue(t2 * t2, P);
      ++i;
    }
    Integer b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = residue(b * b, P);
    m = i;
    c = residue(b * b, P);
    t = residue(t * c, P);
    r = residue(r * b, P);
  }
  return r;
}

// The smaller of the two square roots, so witnesses do not depend on the
// branch Tonelli-Shanks happens to land on.
Integer sqrt_mod_prime(const Integer& n, std::uint64_t p) {
  const Integer r = tonelli_shanks(n, p);
  return r == 0 ? r : Integer(std::min(r, Integer(p - r)));
}

IntPolynomial square_root_polynomial(const Integer& u) { return IntPolynomial({-u, Integer(0), Integer(1)}); }

}  // namespace

// ---------------------------------------------------------------------------
// Valuations

std::int64_t vp(std::uint64_t p, const Integer& x) {
  require_prime(p);
  if (x == 0) throw std::domain_error("v_p(0) is +infinity");
  return valuation_of(x, p);
}

std::int64_t vp(std::uint64_t p, const Rational& x) {
  require_prime(p);
  if (x == 0) throw std::domain_error("v_p(0) is +infinity");
  return valuation_of(x.get_num(), p) - valuation_of(x.get_den(), p);
}

Rational padic_abs(std::uint64_t p, const Rational& x) {
  require_prime(p);
  if (x == 0) return Rational(0);
  const std::int64_t v = vp(p, x);
  if (v >= 0) return Rational(Integer(1), ipow(p, static_cast<std::uint64_t>(v)));
  return Rational(ipow(p, static_cast<std::uint64_t>(-v)));
}

Integer unit_residue_mod(const Rational& a, std::uint64_t p, unsigned k) {
  const std::int64_t v = vp(p, a);
  Integer num = a.get_num(), den = a.get_den();
  if (v > 0) mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), ipow(p, static_cast<std::uint64_t>(v)).get_mpz_t());
  if (v < 0) mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), ipow(p, static_cast<std::uint64_t>(-v)).get_mpz_t());
  const Integer modulus = ipow(p, k);
  return residue(num * inverse_mod(den, modulus), modulus);
}

// ---------------------------------------------------------------------------
// PadicApprox

PadicApprox PadicApprox::exact_zero(std::uint64_t p) {
  require_prime(p);
  return PadicApprox(p, Kind::exact_zero, 0, Integer(0), 0);
}

PadicApprox PadicApprox::zero_mod(std::uint64_t p, std::int64_t absolute_precision) {
  require_prime(p);
  return PadicApprox(p, Kind::inexact_zero, absolute_precision, Integer(0), 0);
}

PadicApprox PadicApprox::from_rational(std::uint64_t p, const Rational& x, unsigned precision) {
  if (x == 0) return exact_zero(p);
  if (precision == 0) throw std::invalid_argument("PadicApprox: precision must be at least 1");
  return from_parts(p, vp(p, x), unit_residue_mod(x, p, precision), precision);
}

PadicApprox PadicApprox::from_parts(std::uint64_t p, std::int64_t valuation, const Integer& unit,
                                    unsigned precision) {
  require_prime(p);
  if (precision == 0) throw std::invalid_argument("PadicApprox: precision must be at least 1");
  if (residue(unit, Integer(p)) == 0) throw std::invalid_argument("PadicApprox: unit must be coprime to p");
  return PadicApprox(p, Kind::nonzero, valuation, residue(unit, ipow(p, precision)), precision);
}

std::int64_t PadicApprox::valuation() const {
  if (kind_ != Kind::nonzero) throw std::domain_error("PadicApprox: a zero has no finite valuation");
  return valuation_;
}

std::optional<std::int64_t> PadicApprox::absolute_precision() const {
  switch (kind_) {
    case Kind::exact_zero: return std::nullopt;
    case Kind::inexact_zero: return valuation_;
    case Kind::nonzero: return valuation_ + static_cast<std::int64_t>(precision_);
  }
  return std::nullopt;
}

Rational PadicApprox::abs() const {
  if (kind_ == Kind::exact_zero) return Rational(0);
  if (kind_ == Kind::inexact_zero) throw std::domain_error("PadicApprox: |x|_p unknown for a zero mod p^N");
  if (valuation_ >= 0) return Rational(Integer(1), ipow(p_, static_cast<std::uint64_t>(valuation_)));
  return Rational(ipow(p_, static_cast<std::uint64_t>(-valuation_)));
}

bool PadicApprox::represents(const Rational& x) const {
  if (kind_ == Kind::exact_zero) return x == 0;
  Rational value(0);
  if (kind_ == Kind::nonzero) {
    value = valuation_ >= 0 ? Rational(unit_ * ipow(p_, static_cast<std::uint64_t>(valuation_)))
                            : Rational(unit_, ipow(p_, static_cast<std::uint64_t>(-valuation_)));
  }
  const Rational diff = x - value;
  if (diff == 0) return true;
  return vp(p_, diff) >= *absolute_precision();
}

PadicApprox PadicApprox::operator-() const {
  if (kind_ != Kind::nonzero) return *this;
  const Integer modulus = ipow(p_, precision_);
  return PadicApprox(p_, kind_, valuation_, residue(-unit_, modulus), precision_);
}

PadicApprox operator+(const PadicApprox& x, const PadicApprox& y) {
  using Kind = PadicApprox::Kind;
  if (x.p_ != y.p_) throw std::invalid_argument("PadicApprox: mixed primes");
  if (x.kind_ == Kind::exact_zero) return y;
  if (y.kind_ == Kind::exact_zero) return x;

  const std::uint64_t p = x.p_;
  const std::int64_t known = std::min(*x.absolute_precision(), *y.absolute_precision());
  if (x.kind_ == Kind::inexact_zero && y.kind_ == Kind::inexact_zero) return PadicApprox::zero_mod(p, known);

  std::int64_t low = std::numeric_limits<std::int64_t>::max();
  for (const PadicApprox* t : {&x, &y}) {
    if (t->kind_ == Kind::nonzero) low = std::min(low, t->valuation_);
  }
  if (known <= low) return PadicApprox::zero_mod(p, known);

  // Sum of the nonzero operands divided by p^low, known modulo p^(known - low).
  const auto width = static_cast<std::uint64_t>(known - low);
  const Integer modulus = ipow(p, width);
  Integer sum = 0;
  for (const PadicApprox* t : {&x, &y}) {
    if (t->kind_ == Kind::nonzero) sum += t->unit_ * ipow(p, static_cast<std::uint64_t>(t->valuation_ - low));
  }
  sum = residue(sum, modulus);
  if (sum == 0) return PadicApprox::zero_mod(p, known);
  const std::int64_t shift = valuation_of(sum, p);
  mpz_divexact(sum.get_mpz_t(), sum.get_mpz_t(), ipow(p, static_cast<std::uint64_t>(shift)).get_mpz_t());
  return PadicApprox::from_parts(p, low + shift, sum, static_cast<unsigned>(width - static_cast<std::uint64_t>(shift)));
}

PadicApprox operator*(const PadicApprox& x, const PadicApprox& y) {
  using Kind = PadicApprox::Kind;
  if (x.p_ != y.p_) throw std::invalid_argument("PadicApprox: mixed primes");
  const std::uint64_t p = x.p_;
  if (x.kind_ == Kind::exact_zero || y.kind_ == Kind::exact_zero) return PadicApprox::exact_zero(p);
  if (x.kind_ == Kind::inexact_zero || y.kind_ == Kind::inexact_zero) {
    // O(p^N) * p^v u = O(p^(N + v)); O(p^N) * O(p^M) = O(p^(N + M)).
    // valuation_ holds N for an inexact zero and v otherwise.
    return PadicApprox::zero_mod(p, x.valuation_ + y.valuation_);
  }
  const unsigned k = std::min(x.precision_, y.precision_);
  return PadicApprox::from_parts(p, x.valuation_ + y.valuation_, x.unit_ * y.unit_, k);
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) throw std::invalid_argument("IntPolynomial: the zero polynomial is not allowed");
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    coeffs.push_back(parse_integer(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

Integer IntPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPolynomial::derivative_at(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = coeffs_.size() - 1; i >= 1; --i) acc = acc * x + coeffs_[i] * static_cast<unsigned long>(i);
  return acc;
}

std::string IntPolynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ',';
    out += to_decimal(coeffs_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Roots

std::vector<Integer> roots_mod_pk(const IntPolynomial& f, std::uint64_t p, unsigned k, std::uint64_t budget) {
  require_prime(p);
  if (k == 0) throw std::invalid_argument("roots_mod_pk: precision must be at least 1");
  const Integer modulus = ipow(p, k);
  if (modulus > Integer(budget) || !modulus.fits_ulong_p()) {
    throw EnumerationBudgetError("roots_mod_pk: " + std::to_string(p) + "^" + std::to_string(k) +
                                 " residues exceed the enumeration budget of " + std::to_string(budget));
  }
  using u128 = unsigned __int128;
  const std::uint64_t m = modulus.get_ui();
  std::vector<std::uint64_t> reduced;
  for (const auto& c : f.coefficients()) reduced.push_back(residue(c, modulus).get_ui());

  std::vector<Integer> roots;
  for (std::uint64_t r = 0; r < m; ++r) {
    std::uint64_t acc = 0;
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
      acc = static_cast<std::uint64_t>((static_cast<u128>(acc) * r + *it) % m);
    }
    if (acc == 0) roots.emplace_back(static_cast<unsigned long>(r));
  }
  return roots;
}

Integer hensel_lift(const IntPolynomial& f, std::uint64_t p, const Integer& r, unsigned k) {
  require_prime(p);
  if (k == 0) throw std::invalid_argument("hensel_lift: precision must be at least 1");
  const Integer P(p);
  Integer a = residue(r, P);
  if (residue(f(a), P) != 0) throw std::invalid_argument("hensel_lift: start is not a root mod p");
  if (residue(f.derivative_at(a), P) == 0) {
    throw std::invalid_argument("hensel_lift: f'(r) = 0 mod p, the root is not simple");
  }
  for (unsigned m = 1; m < k;) {
    const unsigned next = std::min(2 * m, k);
    const Integer modulus = ipow(p, next);
    a = residue(a - f(a) * inverse_mod(f.derivative_at(a), modulus), modulus);
    m = next;
  }
  return a;
}

std::string_view to_string(RootVerdict v) {
  switch (v) {
    case RootVerdict::certified_no: return "certified-no";
    case RootVerdict::certified_yes: return "certified-yes";
    case RootVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ZpRootCertificate has_root_in_zp(const IntPolynomial& f, std::uint64_t p, unsigned effort,
                                 std::optional<unsigned> witness_precision, std::uint64_t budget) {
  require_prime(p);
  if (effort == 0) throw std::invalid_argument("has_root_in_zp: effort must be at least 1");
  const unsigned target = witness_precision.value_or(effort);
  if (target == 0) throw std::invalid_argument("has_root_in_zp: witness precision must be at least 1");

  ZpRootCertificate cert{p, f, RootVerdict::inconclusive, effort, std::nullopt, false, std::nullopt, 0, 0, {}};
  auto exact = [&](Integer root) {
    cert.verdict = RootVerdict::certified_yes;
    cert.precision = target;
    cert.witness = std::move(root);
    cert.exact_root = true;
    return cert;
  };
  if (f(Integer(0)) == 0) return exact(Integer(0));

  // Roots mod p^k are exactly the lifts r + j p^(k-1) of roots mod p^(k-1).
  std::vector<Integer> roots{Integer(0)};
  Integer modulus = 1;
  std::uint64_t evaluated = 0;
  for (unsigned k = 1; k <= effort; ++k) {
    const Integer next_modulus = modulus * p;
    evaluated += roots.size() * p;
    if (evaluated > budget) {
      throw EnumerationBudgetError("has_root_in_zp: enumeration budget of " + std::to_string(budget) + " exhausted");
    }
    std::vector<Integer> lifted;
    for (const auto& r : roots) {
      for (std::uint64_t j = 0; j < p; ++j) {
        Integer candidate = r + modulus * j;
        if (residue(f(candidate), next_modulus) == 0) lifted.push_back(std::move(candidate));
      }
    }
    std::sort(lifted.begin(), lifted.end());
    roots = std::move(lifted);
    modulus = next_modulus;
    cert.root_counts.push_back(roots.size());

    if (roots.empty()) {
      cert.verdict = RootVerdict::certified_no;
      cert.precision = k;
      return cert;
    }
    for (const auto& r : roots) {
      if (f(r) == 0) return exact(r);
      if (f(r - modulus) == 0) return exact(r - modulus);
    }
    for (const auto& r : roots) {
      const Integer slope = f.derivative_at(r);
      if (slope == 0) continue;
      const std::int64_t delta = valuation_of(slope, p);
      if (valuation_of(f(r), p) <= 2 * delta) continue;
      cert.verdict = RootVerdict::certified_yes;
      cert.precision = target;
      cert.start = r;
      cert.start_precision = k;
      cert.derivative_valuation = delta;
      cert.witness = newton_lift(f, p, r, delta, target);
      return cert;
    }
  }
  return cert;
}

bool check_certificate(const ZpRootCertificate& cert, std::uint64_t budget) {
  const auto& f = cert.poly;
  switch (cert.verdict) {
    case RootVerdict::certified_no:
      return roots_mod_pk(f, cert.p, cert.precision, budget).empty();
    case RootVerdict::certified_yes: {
      if (!cert.witness) return false;
      if (cert.exact_root) return f(*cert.witness) == 0;
      if (!cert.start) return false;
      const Integer P(cert.p);
      const Integer modulus = ipow(cert.p, cert.precision);
      const Integer start_value = f(*cert.start);
      const Integer slope = f.derivative_at(*cert.start);
      if (slope == 0 || valuation_of(slope, cert.p) != cert.derivative_valuation) return false;
      if (start_value != 0 && valuation_of(start_value, cert.p) <= 2 * cert.derivative_valuation) return false;
      return residue(f(*cert.witness), modulus) == 0 && residue(*cert.witness - *cert.start, P) == 0;
    }
    case RootVerdict::inconclusive:
      return !cert.root_counts.empty() &&
             std::none_of(cert.root_counts.begin(), cert.root_counts.end(), [](std::size_t c) { return c == 0; });
  }
  return false;
}

// ---------------------------------------------------------------------------
// Integrality of roots of monic polynomials

IntegralityCertificate monic_root_in_qp_reduces_to_zp(const IntPolynomial& f, std::uint64_t p) {
  require_prime(p);
  if (!f.is_monic()) throw std::invalid_argument("monic_root_in_qp_reduces_to_zp: polynomial is not monic");
  IntegralityCertificate cert{p, f, f.degree(), {}, 16, false};
  for (std::size_t i = 0; i < f.degree(); ++i) {
    const Integer& c = f.coefficients()[i];
    if (c == 0) continue;
    cert.lower_terms.push_back({i, c, valuation_of(c, p)});
  }
  cert.valid = check_certificate(cert);
  return cert;
}

bool check_certificate(const IntegralityCertificate& cert) {
  const auto& f = cert.poly;
  if (!f.is_monic() || cert.degree != f.degree()) return false;
  const auto d = static_cast<std::int64_t>(cert.degree);
  std::size_t expected_terms = 0;
  for (std::size_t i = 0; i < f.degree(); ++i) expected_terms += f.coefficients()[i] != 0;
  if (expected_terms != cert.lower_terms.size()) return false;
  for (const auto& term : cert.lower_terms) {
    if (term.degree >= cert.degree || f.coefficients()[term.degree] != term.coefficient) return false;
    if (term.coefficient_valuation != valuation_of(term.coefficient, cert.p)) return false;
    // Integer coefficients have v >= 0, and (d - i) v < 0 for v < 0, which
    // makes v(c_i) + i v > d v for every negative v.
    if (term.coefficient_valuation < 0) return false;
    const auto i = static_cast<std::int64_t>(term.degree);
    for (std::int64_t v = -1; v >= -cert.checked_down_to; --v) {
      if (!(term.coefficient_valuation + i * v > d * v)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Squares in Q_p

std::string_view to_string(SquareReason r) {
  switch (r) {
    case SquareReason::square: return "square";
    case SquareReason::odd_valuation: return "odd-valuation";
    case SquareReason::non_residue: return "non-residue";
    case SquareReason::unit_not_one_mod_8: return "unit-not-1-mod-8";
  }
  return "square";
}

SquareCertificate is_square_in_qp(const Rational& a, std::uint64_t p, unsigned precision) {
  require_prime(p);
  if (a == 0) throw std::domain_error("is_square_in_qp: a must be nonzero");
  if (precision == 0) throw std::invalid_argument("is_square_in_qp: precision must be at least 1");
  SquareCertificate cert{p, a, false, SquareReason::odd_valuation, vp(p, a), std::nullopt, precision, std::nullopt};
  if (cert.valuation % 2 != 0) return cert;

  if (p == 2) {
    cert.unit_residue = unit_residue_mod(a, 2, 3);
    if (*cert.unit_residue != 1) {
      cert.reason = SquareReason::unit_not_one_mod_8;
      return cert;
    }
    // x^2 - u at x = 1: v(f(1)) >= 3 > 2 v(f'(1)) = 2.
    const Integer u = unit_residue_mod(a, 2, std::max(precision, 3U));
    cert.witness = newton_lift(square_root_polynomial(u), 2, Integer(1), 1, precision);
  } else {
    const Integer P(p);
    cert.unit_residue = unit_residue_mod(a, p, 1);
    if (mpz_legendre(cert.unit_residue->get_mpz_t(), P.get_mpz_t()) != 1) {
      cert.reason = SquareReason::non_residue;
      return cert;
    }
    const Integer u = unit_residue_mod(a, p, precision);
    cert.witness = hensel_lift(square_root_polynomial(u), p, sqrt_mod_prime(*cert.unit_residue, p), precision);
  }
  cert.is_square = true;
  cert.reason = SquareReason::square;
  return cert;
}

bool check_certificate(const SquareCertificate& cert) {
  const SquareCertificate fresh = is_square_in_qp(cert.value, cert.p, cert.precision);
  if (fresh.is_square != cert.is_square || fresh.reason != cert.reason || fresh.valuation != cert.valuation) {
    return false;
  }
  if (!cert.is_square) return true;
  if (!cert.witness) return false;
  const Integer modulus = ipow(cert.p, cert.precision);
  const Integer u = unit_residue_mod(cert.value, cert.p, cert.precision);
  return residue(*cert.witness * *cert.witness - u, modulus) == 0;
}

// ---------------------------------------------------------------------------
// JSON

std::string to_json(const ZpRootCertificate& cert) {
  ordered_json j;
  j["kind"] = "zp-root";
  j["p"] = std::to_string(cert.p);
  j["poly"] = cert.poly.to_string();
  j["verdict"] = std::string(to_string(cert.verdict));
  j["precision"] = cert.precision;
  if (cert.witness) {
    j["witness"] = to_decimal(*cert.witness);
    j["exact_root"] = cert.exact_root;
  }
  if (cert.start) {
    j["start"] = to_decimal(*cert.start);
    j["start_precision"] = cert.start_precision;
    j["derivative_valuation"] = cert.derivative_valuation;
  }
  j["root_counts"] = cert.root_counts;
  return j.dump();
}

std::string to_json(const IntegralityCertificate& cert) {
  ordered_json j;
  j["kind"] = "monic-integrality";
  j["p"] = std::to_string(cert.p);
  j["poly"] = cert.poly.to_string();
  j["degree"] = cert.degree;
  j["leading_term_valuation"] = std::to_string(cert.degree) + "*v";
  ordered_json terms = ordered_json::array();
  for (const auto& t : cert.lower_terms) {
    ordered_json term;
    term["degree"] = t.degree;
    term["coefficient"] = to_decimal(t.coefficient);
    term["coefficient_valuation"] = t.coefficient_valuation;
    term["term_valuation"] = std::to_string(t.coefficient_valuation) + "+" + std::to_string(t.degree) + "*v";
    terms.push_back(std::move(term));
  }
  j["lower_terms"] = std::move(terms);
  j["checked_down_to"] = -cert.checked_down_to;
  j["valid"] = cert.valid;
  return j.dump();
}

std::string to_json(const SquareCertificate& cert) {
  ordered_json j;
  j["kind"] = "qp-square";
  j["p"] = std::to_string(cert.p);
  j["value"] = to_decimal(cert.value);
  j["is_square"] = cert.is_square;
  j["reason"] = std::string(to_string(cert.reason));
  j["valuation"] = cert.valuation;
  if (cert.unit_residue) {
    j["unit_residue"] = to_decimal(*cert.unit_residue);
    j["unit_residue_modulus"] = cert.p == 2 ? "8" : std::to_string(cert.p);
  }
  j["precision"] = cert.precision;
  if (cert.witness) j["witness"] = to_decimal(*cert.witness);
  return j.dump();
}

}  // namespace ramanujan

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramanujan/integer.hpp"

namespace ramanujan {

// ---------------------------------------------------------------------------
// Valuations
// ---------------------------------------------------------------------------

/// Exponent of p in a nonzero rational. Throws std::domain_error for x = 0
/// (the valuation is +infinity; callers branch on zero themselves) and
/// std::invalid_argument when p is not prime.
std::int64_t vp(std::uint64_t p, const Rational& x);
std::int64_t vp(std::uint64_t p, const Integer& x);

/// |x|_p = p^(-v_p(x)) as an exact rational; |0|_p = 0.
Rational padic_abs(std::uint64_t p, const Rational& x);

// ---------------------------------------------------------------------------
// Finite-precision p-adic numbers
// ---------------------------------------------------------------------------

/// p^valuation * unit, with unit known modulo p^precision.
///
/// Three states: an exact zero, a nonzero approximation (unit in [1, p^k),
/// coprime to p, k >= 1), and a zero known only modulo p^N, which is what
/// total cancellation in a sum leaves behind. Arithmetic never reports more
/// precision than its operands justify.
class PadicApprox {
 public:
  static PadicApprox exact_zero(std::uint64_t p);
  /// Zero known modulo p^absolute_precision.
  static PadicApprox zero_mod(std::uint64_t p, std::int64_t absolute_precision);
  /// x to relative precision k (k >= 1); x = 0 gives the exact zero.
  static PadicApprox from_rational(std::uint64_t p, const Rational& x, unsigned precision);
  /// p^valuation * unit; unit must be coprime to p and is reduced modulo p^precision.
  static PadicApprox from_parts(std::uint64_t p, std::int64_t valuation, const Integer& unit, unsigned precision);

  std::uint64_t prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return kind_ != Kind::nonzero; }
  bool is_exact_zero() const noexcept { return kind_ == Kind::exact_zero; }

  /// Nonzero values only; throws std::domain_error for zeros.
  std::int64_t valuation() const;
  const Integer& unit() const noexcept { return unit_; }
  /// Relative precision k (0 for any zero).
  unsigned precision() const noexcept { return precision_; }
  /// The value is known modulo p^N for the returned N; nullopt for the exact zero.
  std::optional<std::int64_t> absolute_precision() const;

  /// |x|_p; throws std::domain_error for a zero known only approximately.
  Rational abs() const;

  /// True when x agrees with this value modulo p^absolute_precision
  /// (for the exact zero: x == 0).
  bool represents(const Rational& x) const;

  PadicApprox operator-() const;
  friend PadicApprox operator+(const PadicApprox& x, const PadicApprox& y);
  friend PadicApprox operator-(const PadicApprox& x, const PadicApprox& y) { return x + (-y); }
  friend PadicApprox operator*(const PadicApprox& x, const PadicApprox& y);

  friend bool operator==(const PadicApprox&, const PadicApprox&) = default;

 private:
  enum class Kind { exact_zero, inexact_zero, nonzero };

  PadicApprox(std::uint64_t p, Kind kind, std::int64_t valuation, Integer unit, unsigned precision)
      : p_(p), kind_(kind), valuation_(valuation), unit_(std::move(unit)), precision_(precision) {}

  std::uint64_t p_;
  Kind kind_;
  std::int64_t valuation_;  // for inexact zeros: the absolute precision
  Integer unit_;
  unsigned precision_;
};

// ---------------------------------------------------------------------------
// Integer polynomials and local roots
// ---------------------------------------------------------------------------

/// c0 + c1 x + ... + cd x^d with cd != 0.
class IntPolynomial {
 public:
  /// Trailing zero coefficients are dropped; the zero polynomial is rejected.
  explicit IntPolynomial(std::vector<Integer> coeffs);
  /// Comma-separated coefficients, constant term first: "-2,0,1" is x^2 - 2.
  static IntPolynomial parse(std::string_view text);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  const Integer& leading() const noexcept { return coeffs_.back(); }
  bool is_monic() const { return coeffs_.back() == 1; }

  Integer operator()(const Integer& x) const;
  Integer derivative_at(const Integer& x) const;
  /// Inverse of parse.
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

class EnumerationBudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Every r in [0, p^k) with f(r) = 0 mod p^k, ascending, by exhaustive
/// enumeration. Throws EnumerationBudgetError when p^k exceeds `budget`.
std::vector<Integer> roots_mod_pk(const IntPolynomial& f, std::uint64_t p, unsigned k,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Lifts a simple root r mod p (f(r) = 0, f'(r) != 0 mod p) to the unique
/// root mod p^k congruent to r, doubling the precision each Newton step.
/// Throws std::invalid_argument when r is not a simple root or k = 0.
Integer hensel_lift(const IntPolynomial& f, std::uint64_t p, const Integer& r, unsigned k);

enum class RootVerdict { certified_no, certified_yes, inconclusive };
std::string_view to_string(RootVerdict v);

struct ZpRootCertificate {
  std::uint64_t p;
  IntPolynomial poly;
  RootVerdict verdict;
  /// certified_no: the k with no roots mod p^k. certified_yes: precision of
  /// the witness. inconclusive: the effort bound.
  unsigned precision;
  /// certified_yes only. A root modulo p^precision, or an exact integer root.
  std::optional<Integer> witness;
  bool exact_root = false;
  /// certified_yes via lifting: the residue mod p^start_precision the lift started from
  /// and v_p(f'(start)). Lifting needs v_p(f(start)) > 2 * derivative_valuation.
  std::optional<Integer> start;
  unsigned start_precision = 0;
  std::int64_t derivative_valuation = 0;
  /// Number of roots mod p^j for j = 1, 2, ... as far as the search went.
  std::vector<std::size_t> root_counts;
};

/// Local solubility of f(x) = 0 in Z_p with effort bound K.
///
/// certified_no when some k <= K has no root mod p^k; certified_yes for an
/// exact integer root or a residue satisfying Hensel's condition
/// v(f(r)) > 2 v(f'(r)), with the lifted witness; inconclusive when every
/// residue root stays singular through p^K. The witness is lifted to
/// `witness_precision` (default K).
ZpRootCertificate has_root_in_zp(const IntPolynomial& f, std::uint64_t p, unsigned effort,
                                 std::optional<unsigned> witness_precision = std::nullopt,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

/// Recomputes a certificate's claims: the witness solves f mod p^precision and
/// is congruent to its start mod p; a certified_no really has no roots mod p^k.
bool check_certificate(const ZpRootCertificate& cert, std::uint64_t budget = kDefaultEnumerationBudget);

struct ValuationTerm {
  std::size_t degree;
  Integer coefficient;
  std::int64_t coefficient_valuation;
};

/// Why a root in Q_p of a monic integer polynomial must lie in Z_p.
///
/// For v = v_p(x) < 0 the leading term has valuation d*v while each other term
/// c_i x^i has valuation v_p(c_i) + i*v > d*v, so the leading term cannot be
/// cancelled. `lower_terms` lists the nonzero c_i (i < d) with their
/// valuations; `checked_down_to` records the range v = -1 .. -checked_down_to
/// on which the inequality was also evaluated numerically.
struct IntegralityCertificate {
  std::uint64_t p;
  IntPolynomial poly;
  std::size_t degree;
  std::vector<ValuationTerm> lower_terms;
  std::int64_t checked_down_to;
  bool valid;
};

/// Throws std::invalid_argument for a non-monic polynomial.
IntegralityCertificate monic_root_in_qp_reduces_to_zp(const IntPolynomial& f, std::uint64_t p);
bool check_certificate(const IntegralityCertificate& cert);

enum class SquareReason { square, odd_valuation, non_residue, unit_not_one_mod_8 };
std::string_view to_string(SquareReason r);

/// Whether a is a square in Q_p.
///
/// a = p^v * u with u a p-adic unit. a is a square iff v is even and u is a
/// square unit: a quadratic residue mod p for odd p, u = 1 mod 8 for p = 2.
/// For squares, `witness` satisfies witness^2 = u mod p^precision, so
/// p^(v/2) * witness is a square root of a to that precision.
struct SquareCertificate {
  std::uint64_t p;
  Rational value;
  bool is_square;
  SquareReason reason;
  std::int64_t valuation;
  /// u mod p for odd p, u mod 8 for p = 2; unset when the valuation is odd.
  std::optional<Integer> unit_residue;
  unsigned precision;
  std::optional<Integer> witness;
};

/// Throws std::domain_error for a = 0.
SquareCertificate is_square_in_qp(const Rational& a, std::uint64_t p, unsigned precision = 10);
bool check_certificate(const SquareCertificate& cert);

/// Unit part u of a nonzero rational as an integer modulo p^k.
Integer unit_residue_mod(const Rational& a, std::uint64_t p, unsigned k);

std::string to_json(const ZpRootCertificate& cert);
std::string to_json(const IntegralityCertificate& cert);
std::string to_json(const SquareCertificate& cert);

}  // namespace ramanujan

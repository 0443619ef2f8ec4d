#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ramanujan/integer.hpp"
#include "ramanujan/report.hpp"

namespace ramanujan {

/// Coefficients a(1), ..., a(max_n) of a cusp form's q-expansion (a(0) = 0).
class QExpansion {
 public:
  QExpansion() = default;
  /// values[i] is a(i + 1).
  explicit QExpansion(std::vector<Integer> values) : values_(std::move(values)) {}

  std::size_t max_n() const noexcept { return values_.size(); }
  /// a(n) for 1 <= n <= max_n; throws std::out_of_range otherwise.
  const Integer& at(std::size_t n) const;
  const Integer& operator[](std::size_t n) const { return at(n); }
  const std::vector<Integer>& values() const noexcept { return values_; }

  friend bool operator==(const QExpansion&, const QExpansion&) = default;

 private:
  std::vector<Integer> values_;
};

/// tau(1), ..., tau(max_n). Construction enforces tau(1) = 1.
class TauTable {
 public:
  explicit TauTable(std::vector<Integer> values);

  std::size_t max_n() const noexcept { return expansion_.max_n(); }
  const Integer& at(std::size_t n) const { return expansion_.at(n); }
  const Integer& operator[](std::size_t n) const { return expansion_.at(n); }
  const QExpansion& expansion() const noexcept { return expansion_; }

  friend bool operator==(const TauTable&, const TauTable&) = default;

 private:
  QExpansion expansion_;
};

/// Weight k and level of a cusp form. Only level 1 exists here.
class WeightLevel {
 public:
  explicit WeightLevel(unsigned weight = 12, unsigned level = 1);
  unsigned weight() const noexcept { return weight_; }
  unsigned level() const noexcept { return level_; }

 private:
  unsigned weight_;
  unsigned level_;
};

/// 1 - trace*T + norm*T^2 with trace = a_p and norm = p^(k-1).
struct HeckePolynomial {
  std::uint64_t p;
  Integer trace;
  Integer norm;

  static HeckePolynomial for_prime(const TauTable& table, std::uint64_t p, const WeightLevel& wl = WeightLevel{});
  /// trace^2 - 4*norm; negative exactly when the reciprocal roots are complex
  /// conjugates of absolute value sqrt(norm).
  Integer discriminant() const { return trace * trace - 4 * norm; }
};

/// An element of SL2(Z).
class MobiusMatrix {
 public:
  /// Throws std::invalid_argument unless ad - bc = 1.
  MobiusMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static MobiusMatrix identity() { return {1, 0, 0, 1}; }

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t c() const noexcept { return c_; }
  std::int64_t d() const noexcept { return d_; }

  friend MobiusMatrix operator*(const MobiusMatrix& x, const MobiusMatrix& y);
  friend bool operator==(const MobiusMatrix&, const MobiusMatrix&) = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

/// tau(n) for n <= max_n, read off q * prod (1 - q^n)^24. Rejects max_n = 0.
TauTable compute_tau_table(std::size_t max_n);

/// Same table through the cube identity: (prod (1 - q^n)^3)^8. Used as an
/// independent cross-check of compute_tau_table.
TauTable tau_table_via_cube(std::size_t max_n);

/// tau(n) from tau(p) alone: prime powers by the three-term recursion,
/// coprime parts multiplied. Throws std::out_of_range when a prime factor of n
/// exceeds table.max_n().
Integer tau_extended(std::uint64_t n, const TauTable& table);

/// Multiplicativity over coprime m <= n with mn <= max_n, then the prime-power
/// recursion for every p^(alpha+2) <= max_n.
VerificationReport verify_conjecture_one(const TauTable& table);

/// For every prime p <= max_n: tau(p)^2 < 4 p^11 ("deligne") and the
/// discriminant of the Hecke polynomial is negative ("hecke-discriminant").
VerificationReport verify_deligne_bound(const TauTable& table);

/// q-expansion of T_p f: a(pn) + p^(k-1) a(n/p), the second term only when p | n.
/// The result holds n <= f.max_n() / p.
QExpansion hecke_apply(const QExpansion& f, std::uint64_t p, const WeightLevel& wl = WeightLevel{});

/// (T_p Delta)(n) == tau(p) tau(n) for primes p <= p_max and pn <= max_n.
VerificationReport verify_eigenform(const TauTable& table, std::uint64_t p_max);

/// (az + b) / (cz + d). Throws std::domain_error unless Im z > 0.
std::complex<double> mobius_act(const MobiusMatrix& g, std::complex<double> z);

/// Smallest imaginary part evaluate_delta accepts.
inline constexpr double kDeltaImagFloor = 0.3;

/// Smallest table size with |q|^max_n < 1e-18 at imaginary part y.
std::size_t delta_terms_required(double imag);

/// sum_{n <= max_n} tau(n) e^(2 pi i n z).
/// Throws std::domain_error when Im z < kDeltaImagFloor or the table is too
/// short for |q|^max_n < 1e-18.
std::complex<double> evaluate_delta(std::complex<double> z, const TauTable& table);

/// Text format: "# tau-table max_n=<N>" then one "n<TAB>tau(n)" line per entry.
void write_tau_table(std::ostream& out, const TauTable& table);
/// Strict inverse of write_tau_table; throws std::runtime_error on malformed input.
TauTable read_tau_table(std::istream& in);

}  // namespace ramanujan

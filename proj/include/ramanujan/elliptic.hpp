#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramanujan/integer.hpp"

namespace ramanujan {

/// y^2 = x^3 + a x + b over Q, a and b cleared to integers.
class CurveSpec {
 public:
  /// Throws std::invalid_argument when the discriminant vanishes.
  CurveSpec(Integer a, Integer b);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  /// -16 (4 a^3 + 27 b^2).
  const Integer& discriminant() const noexcept { return discriminant_; }

 private:
  Integer a_, b_, discriminant_;
};

Integer short_weierstrass_discriminant(const Integer& a, const Integer& b);

enum class ReductionKind { good, bad };

/// Reduction of a curve at p. Only affine solutions (x, y) in F_p x F_p are
/// counted, so affine_count = p - a_p; the point at infinity is not included.
struct ReductionData {
  std::uint64_t p;
  ReductionKind kind;
  std::uint64_t affine_count;
  std::optional<std::int64_t> a_p;  // good reduction only

  /// a_p^2 <= 4p; vacuously true at bad primes.
  bool within_hasse_bound() const;
  friend bool operator==(const ReductionData&, const ReductionData&) = default;
};

/// Good iff p does not divide the discriminant of this model; the affine count
/// is exhaustive over F_p x F_p. Throws std::invalid_argument unless p is prime.
ReductionData reduce_curve(const CurveSpec& curve, std::uint64_t p);

/// reduce_curve for every prime p <= p_max, ascending.
std::vector<ReductionData> ap_sweep(const CurveSpec& curve, std::uint64_t p_max);

/// #{(x, y) in F_p^2 : y^2 = x^3 + a x + b}, by the double loop over x and y.
std::uint64_t count_affine_naive(const Integer& a, const Integer& b, std::uint64_t p);
/// Same count as sum over x of 1 + chi(x^3 + a x + b), chi the Legendre symbol
/// (every element of F_2 has exactly one square root).
std::uint64_t count_affine_by_character(const Integer& a, const Integer& b, std::uint64_t p);

/// Whether the reduced curve has a point where both partial derivatives vanish.
bool has_singular_point_mod_p(const Integer& a, const Integer& b, std::uint64_t p);

/// {"p","kind","affine_count","a_p"} with integers as decimal strings; a_p omitted at bad primes.
std::string to_json(const ReductionData& record);

}  // namespace ramanujan

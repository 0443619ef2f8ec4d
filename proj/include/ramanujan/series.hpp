#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ramanujan/integer.hpp"

namespace ramanujan {

/// Power series in q with exact integer coefficients, known through q^order.
///
/// Binary operations on series of different orders truncate to the smaller
/// order; no operation ever claims a coefficient beyond what both operands know.
class TruncatedSeries {
 public:
  /// The zero series through q^order.
  explicit TruncatedSeries(std::size_t order);
  /// Coefficient i of q^i; order is coeffs.size() - 1. Empty input is rejected.
  explicit TruncatedSeries(std::vector<Integer> coeffs);

  static TruncatedSeries one(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  /// Drops every coefficient above q^order. Requires order <= this->order().
  TruncatedSeries truncated(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

enum class MulAlgorithm {
  schoolbook,
  karatsuba,
  automatic,  // schoolbook below a size threshold, karatsuba above
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b,
                    MulAlgorithm algorithm = MulAlgorithm::automatic);
/// Binary exponentiation; pow(a, 0) is the constant 1 at a's order.
TruncatedSeries pow(const TruncatedSeries& a, std::uint64_t exponent);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

/// prod_{n=1..order} (1 - q^n)^exponent through q^order.
///
/// Each factor is expanded from its binomial coefficients and folded into the
/// accumulator in place, so a factor costs O(order * min(exponent, order / n)).
/// Throws std::invalid_argument for order 0.
TruncatedSeries eta_power_product(std::uint64_t exponent, std::size_t order);

}  // namespace ramanujan

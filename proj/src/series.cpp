#include "ramanujan/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramanujan {

namespace {

constexpr std::size_t kKaratsubaCutoff = 32;
constexpr std::size_t kAutomaticThreshold = 96;

// out[0 .. a.size() + b.size() - 1) += a * b, no truncation.
void schoolbook_accumulate(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
}

// Full product of two equal-length operands into out (size 2n - 1, zeroed by caller).
void karatsuba_into(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out) {
  const std::size_t n = a.size();
  if (n <= kKaratsubaCutoff) {
    schoolbook_accumulate(a, b, out);
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;

  auto a0 = a.first(lo), a1 = a.subspan(lo);
  auto b0 = b.first(lo), b1 = b.subspan(lo);

  std::vector<Integer> z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
  karatsuba_into(a0, b0, z0);
  karatsuba_into(a1, b1, z2);

  std::vector<Integer> sa(a1.begin(), a1.end()), sb(b1.begin(), b1.end());
  for (std::size_t i = 0; i < lo; ++i) {
    sa[i] += a0[i];
    sb[i] += b0[i];
  }
  karatsuba_into(sa, sb, z1);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + lo] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * lo] += z2[i];
}

std::vector<Integer> mul_schoolbook_truncated(std::span<const Integer> a, std::span<const Integer> b,
                                              std::size_t order) {
  std::vector<Integer> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

std::vector<Integer> mul_karatsuba_truncated(std::span<const Integer> a, std::span<const Integer> b,
                                             std::size_t order) {
  const std::size_t n = order + 1;
  std::vector<Integer> full(2 * n - 1);
  karatsuba_into(a.first(n), b.first(n), full);
  full.resize(n);
  return full;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient vector");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw std::invalid_argument("truncated: cannot extend a series beyond its known order");
  }
  return TruncatedSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Integer> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) out[i] = a[i] + b[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b, MulAlgorithm algorithm) {
  const std::size_t order = std::min(a.order(), b.order());
  if (algorithm == MulAlgorithm::automatic) {
    algorithm = order + 1 < kAutomaticThreshold ? MulAlgorithm::schoolbook : MulAlgorithm::karatsuba;
  }
  if (algorithm == MulAlgorithm::schoolbook) {
    return TruncatedSeries(mul_schoolbook_truncated(a.coefficients(), b.coefficients(), order));
  }
  return TruncatedSeries(mul_karatsuba_truncated(a.coefficients(), b.coefficients(), order));
}

TruncatedSeries pow(const TruncatedSeries& a, std::uint64_t exponent) {
  TruncatedSeries result = TruncatedSeries::one(a.order());
  TruncatedSeries base = a;
  while (exponent != 0) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent != 0) base = mul(base, base);
  }
  return result;
}

TruncatedSeries eta_power_product(std::uint64_t exponent, std::size_t order) {
  if (order == 0) throw std::invalid_argument("eta_power_product: order must be at least 1");

  std::vector<Integer> acc(order + 1);
  acc[0] = 1;
  if (exponent == 0) return TruncatedSeries(std::move(acc));

  // Signed binomial coefficients (-1)^j C(exponent, j); only the first
  // order + 1 can ever land below the truncation.
  const std::uint64_t terms = std::min<std::uint64_t>(exponent, order);
  std::vector<Integer> binom(terms + 1);
  binom[0] = 1;
  for (std::uint64_t j = 1; j <= terms; ++j) {
    binom[j] = -binom[j - 1] * (exponent - j + 1);
    mpz_divexact_ui(binom[j].get_mpz_t(), binom[j].get_mpz_t(), j);
  }

  for (std::size_t n = 1; n <= order; ++n) {
    // Descending i reads only entries not yet updated for this factor.
    for (std::size_t i = order; i >= n; --i) {
      for (std::size_t j = 1; j <= terms && j * n <= i; ++j) {
        mpz_addmul(acc[i].get_mpz_t(), acc[i - j * n].get_mpz_t(), binom[j].get_mpz_t());
      }
    }
  }
  return TruncatedSeries(std::move(acc));
}

}  // namespace ramanujan

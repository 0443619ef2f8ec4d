#include "ramanujan/elliptic.hpp"

#include <stdexcept>

#include <json.hpp>

#include "ramanujan/primes.hpp"

namespace ramanujan {

namespace {

using u128 = unsigned __int128;

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::uint64_t reduce(const Integer& x, std::uint64_t p) { return residue(x, Integer(p)).get_ui(); }

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(x) * y % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r;
}

// x^3 + a x + b mod p with a, b already reduced.
std::uint64_t cubic(std::uint64_t x, std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (mul_mod(mul_mod(x, x, p), x, p) + mul_mod(a, x, p) + b) % p;
}

// Exhaustive count that tabulates square roots once: O(p) memory and time.
std::uint64_t count_affine_tabulated(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::vector<std::uint32_t> roots_of(p, 0);
  for (std::uint64_t y = 0; y < p; ++y) ++roots_of[mul_mod(y, y, p)];
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < p; ++x) count += roots_of[cubic(x, a, b, p)];
  return count;
}

}  // namespace

Integer short_weierstrass_discriminant(const Integer& a, const Integer& b) {
  return -16 * (4 * a * a * a + 27 * b * b);
}

CurveSpec::CurveSpec(Integer a, Integer b)
    : a_(std::move(a)), b_(std::move(b)), discriminant_(short_weierstrass_discriminant(a_, b_)) {
  if (discriminant_ == 0) {
    throw std::invalid_argument("singular curve: y^2 = x^3 + " + to_decimal(a_) + "x + " + to_decimal(b_) +
                                " has discriminant 0");
  }
}

bool ReductionData::within_hasse_bound() const {
  if (!a_p) return true;
  const auto ap = static_cast<__int128>(*a_p);
  return ap * ap <= static_cast<__int128>(4) * p;
}

std::uint64_t count_affine_naive(const Integer& a, const Integer& b, std::uint64_t p) {
  require_prime(p);
  const std::uint64_t ar = reduce(a, p), br = reduce(b, p);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t rhs = cubic(x, ar, br, p);
    for (std::uint64_t y = 0; y < p; ++y) count += mul_mod(y, y, p) == rhs;
  }
  return count;
}

std::uint64_t count_affine_by_character(const Integer& a, const Integer& b, std::uint64_t p) {
  require_prime(p);
  const std::uint64_t ar = reduce(a, p), br = reduce(b, p);
  if (p == 2) return 2;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t c = cubic(x, ar, br, p);
    if (c == 0) {
      count += 1;
    } else if (pow_mod(c, (p - 1) / 2, p) == 1) {
      count += 2;
    }
  }
  return count;
}

bool has_singular_point_mod_p(const Integer& a, const Integer& b, std::uint64_t p) {
  require_prime(p);
  const std::uint64_t ar = reduce(a, p), br = reduce(b, p);
  for (std::uint64_t x = 0; x < p; ++x) {
    if ((mul_mod(3 % p, mul_mod(x, x, p), p) + ar) % p != 0) continue;
    const std::uint64_t rhs = cubic(x, ar, br, p);
    for (std::uint64_t y = 0; y < p; ++y) {
      if (mul_mod(2 % p, y, p) == 0 && mul_mod(y, y, p) == rhs) return true;
    }
  }
  return false;
}

ReductionData reduce_curve(const CurveSpec& curve, std::uint64_t p) {
  require_prime(p);
  const bool good = residue(curve.discriminant(), Integer(p)) != 0;
  ReductionData out{p, good ? ReductionKind::good : ReductionKind::bad,
                    count_affine_tabulated(reduce(curve.a(), p), reduce(curve.b(), p), p), std::nullopt};
  if (good) out.a_p = static_cast<std::int64_t>(p) - static_cast<std::int64_t>(out.affine_count);
  return out;
}

std::vector<ReductionData> ap_sweep(const CurveSpec& curve, std::uint64_t p_max) {
  std::vector<ReductionData> out;
  for (std::uint64_t p : primes_up_to(p_max)) out.push_back(reduce_curve(curve, p));
  return out;
}

std::string to_json(const ReductionData& record) {
  nlohmann::ordered_json j;
  j["p"] = std::to_string(record.p);
  j["kind"] = record.kind == ReductionKind::good ? "good" : "bad";
  j["affine_count"] = std::to_string(record.affine_count);
  if (record.a_p) j["a_p"] = std::to_string(*record.a_p);
  return j.dump();
}

}  // namespace ramanujan

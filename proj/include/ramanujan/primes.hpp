#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ramanujan {

/// Deterministic for the whole 64-bit range (Miller-Rabin with fixed bases).
bool is_prime(std::uint64_t n);

/// Ascending primes <= limit.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization of n >= 1 by trial division, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

}  // namespace ramanujan

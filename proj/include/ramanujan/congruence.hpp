#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramanujan/integer.hpp"
#include "ramanujan/report.hpp"
#include "ramanujan/tau.hpp"

namespace ramanujan {

/// Right-hand sides of the congruences tau(p) = rhs(p) (mod m).
enum class RhsForm {
  one_plus_p11,  // 1 + p^11
  one_plus_p,    // 1 + p
};

Integer evaluate_rhs(RhsForm form, std::uint64_t p);

struct CongruenceLaw {
  std::string id;
  Integer modulus;
  RhsForm rhs;
  std::set<std::uint64_t> excluded_primes;
};

/// tau(p) = 1 + p^11 (mod 691), p != 691.
CongruenceLaw law_mod_691();
/// tau(p) = 1 + p^11 (mod 2^5), p != 2.
CongruenceLaw law_mod_32();
/// tau(p) = 1 + p (mod 3), p != 3.
CongruenceLaw law_mod_3();
/// The three laws above, in that order.
std::vector<CongruenceLaw> stated_congruences();

/// One record per prime p <= max_n outside the law's exclusions, ascending.
VerificationReport verify_congruence(const CongruenceLaw& law, const TauTable& table);

/// Smallest prime p <= max_n (not in `excluded`) with tau(p) != rhs(p) mod m,
/// or nullopt when the whole range agrees.
std::optional<std::uint64_t> find_counterexample_scan(const Integer& modulus, RhsForm rhs, const TauTable& table,
                                                      const std::set<std::uint64_t>& excluded = {});

}  // namespace ramanujan

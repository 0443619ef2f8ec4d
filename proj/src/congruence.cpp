#include "ramanujan/congruence.hpp"

#include <stdexcept>

#include "ramanujan/primes.hpp"

namespace ramanujan {

Integer evaluate_rhs(RhsForm form, std::uint64_t p) {
  switch (form) {
    case RhsForm::one_plus_p11: return 1 + ipow(p, 11);
    case RhsForm::one_plus_p: return Integer(1) + Integer(p);
  }
  throw std::invalid_argument("unknown rhs form");
}

CongruenceLaw law_mod_691() { return {"congruence-691", Integer(691), RhsForm::one_plus_p11, {691}}; }
CongruenceLaw law_mod_32() { return {"congruence-32", Integer(32), RhsForm::one_plus_p11, {2}}; }
CongruenceLaw law_mod_3() { return {"congruence-3", Integer(3), RhsForm::one_plus_p, {3}}; }

std::vector<CongruenceLaw> stated_congruences() { return {law_mod_691(), law_mod_32(), law_mod_3()}; }

VerificationReport verify_congruence(const CongruenceLaw& law, const TauTable& table) {
  VerificationReport report;
  for (std::uint64_t p : primes_up_to(table.max_n())) {
    if (law.excluded_primes.contains(p)) continue;
    report.push_back(make_congruence_record(law.id, {{"p", Integer(p)}}, table.at(p), evaluate_rhs(law.rhs, p),
                                            law.modulus));
  }
  return report;
}

std::optional<std::uint64_t> find_counterexample_scan(const Integer& modulus, RhsForm rhs, const TauTable& table,
                                                      const std::set<std::uint64_t>& excluded) {
  if (modulus <= 0) throw std::invalid_argument("find_counterexample_scan: modulus must be positive");
  for (std::uint64_t p : primes_up_to(table.max_n())) {
    if (excluded.contains(p)) continue;
    if (residue(table.at(p), modulus) != residue(evaluate_rhs(rhs, p), modulus)) return p;
  }
  return std::nullopt;
}

}  // namespace ramanujan

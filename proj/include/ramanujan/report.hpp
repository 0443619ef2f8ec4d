#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramanujan/integer.hpp"

namespace ramanujan {

/// How a record compares its two sides.
enum class Relation {
  equal,      // lhs == rhs
  less,       // lhs < rhs
  congruent,  // lhs == rhs as least non-negative residues modulo `modulus`
};

std::string_view to_string(Relation r);
Relation relation_from_string(std::string_view s);

/// One checked instance of a law.
///
/// For congruences lhs and rhs are stored already reduced to [0, modulus).
/// `pass` is always what `evaluate()` computes from the stored fields.
struct VerificationRecord {
  std::string law;
  std::vector<std::pair<std::string, Integer>> params;
  Integer lhs;
  Integer rhs;
  Relation relation = Relation::equal;
  std::optional<Integer> modulus;
  bool pass = false;

  bool evaluate() const;
  /// Looks up a named parameter; throws std::out_of_range when absent.
  const Integer& param(std::string_view name) const;

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

VerificationRecord make_record(std::string law, std::vector<std::pair<std::string, Integer>> params,
                               Integer lhs, Integer rhs, Relation relation);
VerificationRecord make_congruence_record(std::string law, std::vector<std::pair<std::string, Integer>> params,
                                          const Integer& lhs, const Integer& rhs, const Integer& modulus);

using VerificationReport = std::vector<VerificationRecord>;

std::size_t count_failures(const VerificationReport& report);

/// One JSON object per line. Every integer is written as a decimal string.
///
/// Congruence records use the flat shape
///   {"law", "p", "lhs_residue", "rhs_residue", "modulus", "pass"}
/// and every other record uses
///   {"law", "params": {...}, "lhs", "rhs", "relation", "pass"}.
std::string to_json_line(const VerificationRecord& record);
VerificationRecord from_json_line(std::string_view line);

std::string to_json_lines(const VerificationReport& report);
VerificationReport from_json_lines(std::string_view text);

}  // namespace ramanujan

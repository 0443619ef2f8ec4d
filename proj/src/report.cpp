#include "ramanujan/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ramanujan {

using nlohmann::ordered_json;

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::less: return "less";
    case Relation::congruent: return "congruent";
  }
  return "equal";
}

Relation relation_from_string(std::string_view s) {
  if (s == "equal") return Relation::equal;
  if (s == "less") return Relation::less;
  if (s == "congruent") return Relation::congruent;
  throw std::invalid_argument("unknown relation '" + std::string(s) + "'");
}

bool VerificationRecord::evaluate() const {
  switch (relation) {
    case Relation::equal: return lhs == rhs;
    case Relation::less: return lhs < rhs;
    case Relation::congruent:
      if (!modulus) return false;
      return residue(lhs, *modulus) == residue(rhs, *modulus);
  }
  return false;
}

const Integer& VerificationRecord::param(std::string_view name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw std::out_of_range("record has no parameter '" + std::string(name) + "'");
}

VerificationRecord make_record(std::string law, std::vector<std::pair<std::string, Integer>> params,
                               Integer lhs, Integer rhs, Relation relation) {
  VerificationRecord r{std::move(law), std::move(params), std::move(lhs), std::move(rhs), relation, std::nullopt, false};
  r.pass = r.evaluate();
  return r;
}

VerificationRecord make_congruence_record(std::string law, std::vector<std::pair<std::string, Integer>> params,
                                          const Integer& lhs, const Integer& rhs, const Integer& modulus) {
  VerificationRecord r{std::move(law), std::move(params), residue(lhs, modulus), residue(rhs, modulus),
                       Relation::congruent, modulus, false};
  r.pass = r.evaluate();
  return r;
}

std::size_t count_failures(const VerificationReport& report) {
  return static_cast<std::size_t>(std::count_if(report.begin(), report.end(), [](const auto& r) { return !r.pass; }));
}

std::string to_json_line(const VerificationRecord& record) {
  ordered_json j;
  j["law"] = record.law;
  if (record.relation == Relation::congruent && record.params.size() == 1 && record.params[0].first == "p") {
    j["p"] = to_decimal(record.params[0].second);
    j["lhs_residue"] = to_decimal(record.lhs);
    j["rhs_residue"] = to_decimal(record.rhs);
    j["modulus"] = to_decimal(record.modulus.value());
    j["pass"] = record.pass;
    return j.dump();
  }
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : record.params) params[key] = to_decimal(value);
  j["params"] = std::move(params);
  j["lhs"] = to_decimal(record.lhs);
  j["rhs"] = to_decimal(record.rhs);
  j["relation"] = std::string(to_string(record.relation));
  if (record.modulus) j["modulus"] = to_decimal(*record.modulus);
  j["pass"] = record.pass;
  return j.dump();
}

VerificationRecord from_json_line(std::string_view line) {
  const auto j = ordered_json::parse(line);
  VerificationRecord r;
  r.law = j.at("law").get<std::string>();
  if (j.contains("lhs_residue")) {
    r.params.emplace_back("p", parse_integer(j.at("p").get<std::string>()));
    r.lhs = parse_integer(j.at("lhs_residue").get<std::string>());
    r.rhs = parse_integer(j.at("rhs_residue").get<std::string>());
    r.relation = Relation::congruent;
    r.modulus = parse_integer(j.at("modulus").get<std::string>());
  } else {
    for (const auto& [key, value] : j.at("params").items()) {
      r.params.emplace_back(key, parse_integer(value.get<std::string>()));
    }
    r.lhs = parse_integer(j.at("lhs").get<std::string>());
    r.rhs = parse_integer(j.at("rhs").get<std::string>());
    r.relation = relation_from_string(j.at("relation").get<std::string>());
    if (j.contains("modulus")) r.modulus = parse_integer(j.at("modulus").get<std::string>());
  }
  r.pass = j.at("pass").get<bool>();
  return r;
}

std::string to_json_lines(const VerificationReport& report) {
  std::string out;
  for (const auto& r : report) {
    out += to_json_line(r);
    out += '\n';
  }
  return out;
}

VerificationReport from_json_lines(std::string_view text) {
  VerificationReport out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(from_json_line(line));
  }
  return out;
}

}  // namespace ramanujan

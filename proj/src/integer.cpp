#include "ramanujan/integer.hpp"

#include <stdexcept>

namespace ramanujan {

std::string to_decimal(const Integer& x) { return x.get_str(10); }

std::string to_decimal(const Rational& x) { return x.get_str(10); }

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  // mpz_set_str rejects a leading '+'.
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer ipow(std::uint64_t base, std::uint64_t exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

Integer residue(const Integer& x, const Integer& m) {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& x, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("no inverse of " + to_decimal(x) + " modulo " + to_decimal(m));
  }
  return r;
}

}  // namespace ramanujan

#include "cayley/numeric.hpp"

#include <stdexcept>

namespace cayley {

BigInt factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
  return result;
}

Rational rat_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw std::invalid_argument("rat_pow: zero base with negative exponent");
  const unsigned long mag = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  BigInt num = int_pow(base.get_num(), static_cast<unsigned>(mag));
  BigInt den = int_pow(base.get_den(), static_cast<unsigned>(mag));
  Rational result;
  if (exp < 0) std::swap(num, den);
  result = Rational(num) / Rational(den);
  return result;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty input");
  const std::string owned(text);
  // mpq_class accepts leading whitespace and partial garbage; validate strictly.
  auto valid_integer = [](std::string_view s) {
    if (s.empty()) return false;
    size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = owned.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer(owned)) throw std::invalid_argument("parse_rational: malformed integer '" + owned + "'");
    return Rational(BigInt(owned));
  }
  const std::string num = owned.substr(0, slash);
  const std::string den = owned.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw std::invalid_argument("parse_rational: malformed rational '" + owned + "'");
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + owned + "'");
  Rational result(BigInt(num), d);
  result.canonicalize();
  return result;
}

double to_double(const Rational& value) { return value.get_d(); }

double to_double(const BigInt& value) { return value.get_d(); }

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  return to_string(z.re) + (z.im > 0 ? "+" : "") + to_string(z.im) + "i";
}

}  // namespace cayley

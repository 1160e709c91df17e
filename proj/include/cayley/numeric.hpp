#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cayley {

// Exact arithmetic everywhere the spectrum is classified; doubles only for
// dense numeric grids and the brute-force eigensolver.
using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);

// base^exp with exp >= 0.
BigInt int_pow(const BigInt& base, unsigned exp);

// base^exp for integer exp of either sign; base must be nonzero when exp < 0.
Rational rat_pow(const Rational& base, long exp);

// Canonical text form: "p" when the denominator is 1, else "p/q" in lowest terms.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

// Accepts "p" or "p/q" (optionally signed). Throws std::invalid_argument on
// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);
double to_double(const BigInt& value);

// Element of Q(i): exact complex coefficients for diagram combinations.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational real, Rational imag = Rational(0))
      : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

std::string to_string(const GaussianRational& z);

}  // namespace cayley

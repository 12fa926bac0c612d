#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace kemeny {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p". Throws ValidationError on malformed text.
Rational parse_rational(const std::string& text);

/// Coefficients in ascending order of degree: c[0] + c[1] t + ...
using IntegerPolynomial = std::vector<Integer>;
using RationalPolynomial = std::vector<Rational>;

}  // namespace kemeny

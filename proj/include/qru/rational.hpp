#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qru {

// Arbitrary-precision exact scalars.  mpq_class is kept canonical by GMP:
// gcd(num, den) = 1, den > 0, zero is 0/1.  Everything downstream relies on
// that canonical form for equality and printing.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "num/den" with den always spelled out, including "3/1".
inline std::string fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// C(k, 2) for k >= 0.
inline long long binom2(long long k) { return k * (k - 1) / 2; }

}  // namespace qru

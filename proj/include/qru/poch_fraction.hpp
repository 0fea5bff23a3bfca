#pragma once

#include <map>

#include "qru/laurent.hpp"
#include "qru/rational.hpp"
#include "qru/rational_function.hpp"

namespace qru {

// A Laurent polynomial divided by a product of factors (1 - q^j)^{m_j} with
// j >= 1.  Keeping the denominator in factored form makes sums of
// q-factorial quotients exact and cheap: common denominators come from
// factorwise maxima, and no polynomial gcd is ever needed.
class PochFraction {
 public:
  PochFraction() : num_(LaurentPoly::zero()) {}
  explicit PochFraction(LaurentPoly p) : num_(std::move(p)) {}

  static PochFraction zero() { return PochFraction(); }
  static PochFraction one() { return PochFraction(LaurentPoly::one()); }
  static PochFraction monomial(const Rational& c, long long e) {
    return PochFraction(LaurentPoly::monomial(c, e));
  }

  const LaurentPoly& num() const { return num_; }
  // factor exponents j >= 1 mapped to multiplicities >= 1
  const std::map<long long, int>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  PochFraction& mul_scalar(const Rational& c);
  PochFraction& mul_monomial(const Rational& c, long long e);
  PochFraction& mul_laurent(const LaurentPoly& p);

  // Multiply by (1 - q^j)^e for any integers j and e.  Negative j is
  // normalized through 1 - q^j = -q^j (1 - q^{-j}); j = 0 with e > 0
  // annihilates the value and with e < 0 is a division by zero
  // (std::domain_error).  Positive powers cancel against the denominator
  // before touching the numerator.
  PochFraction& mul_factor(long long j, long long e);

  // Multiply by (q^s; q)_n^{sign} for n >= 0 and sign in {+1, -1}.
  PochFraction& mul_poch(long long s, long long n, int sign);

  // Multiply by (1 + q^m)^{sign} = ((1 - q^{2m}) / (1 - q^m))^{sign}.
  PochFraction& mul_one_plus(long long m, int sign);

  PochFraction operator-() const;
  PochFraction& operator+=(const PochFraction& o);
  PochFraction& operator-=(const PochFraction& o);
  friend PochFraction operator+(PochFraction a, const PochFraction& b) {
    a += b;
    return a;
  }
  friend PochFraction operator-(PochFraction a, const PochFraction& b) {
    a -= b;
    return a;
  }
  friend PochFraction operator*(const PochFraction& a, const PochFraction& b);
  PochFraction& operator*=(const PochFraction& o) {
    *this = *this * o;
    return *this;
  }

  friend bool operator==(const PochFraction& a, const PochFraction& b) {
    return (a - b).is_zero();
  }
  friend bool operator!=(const PochFraction& a, const PochFraction& b) {
    return !(a == b);
  }

  // The image under q -> 1/q, with the denominator kept in the same
  // factored shape via 1/(1 - q^{-j}) = -q^j / (1 - q^j).
  PochFraction substitute_inverse() const;

  // Clear the denominator by exact division.  Throws std::domain_error when
  // the value is not a Laurent polynomial.
  LaurentPoly to_laurent() const;

  // num/den in canonical reduced form, for display and cross-checks.
  RationalFunction to_rational_function() const;

 private:
  LaurentPoly num_;
  std::map<long long, int> den_;
};

}  // namespace qru

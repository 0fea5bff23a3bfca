#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qru/rational.hpp"

namespace qru {

// Sparse Laurent polynomial in one variable q with exact rational
// coefficients.  Invariant: the term map never stores a zero coefficient,
// so the zero polynomial is the empty map and equality is map equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(1, 0); }
  // c * q^e
  static LaurentPoly monomial(Rational c, long long e);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // true when no negative exponents appear (ordinary polynomial)
  bool is_ordinary() const { return terms_.empty() || terms_.begin()->first >= 0; }

  const std::map<long long, Rational>& terms() const { return terms_; }
  long long min_exp() const;  // requires nonzero
  long long max_exp() const;  // requires nonzero
  Rational coeff(long long e) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly& mul_scalar(const Rational& c);
  LaurentPoly& mul_monomial(const Rational& c, long long e);

  // q -> q^{-1}
  LaurentPoly substitute_inverse() const;
  // q -> q^s, s != 0
  LaurentPoly scale_exponents(long long s) const;

  // Quotient and remainder by a nonzero divisor, after shifting both
  // operands so the divisor is ordinary with nonzero constant term.  The
  // quotient is Laurent in general; remainder has degree < deg(divisor).
  std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& divisor) const;
  // Exact quotient, or nullopt when the division leaves a remainder.
  std::optional<LaurentPoly> divided_exactly_by(const LaurentPoly& divisor) const;

  // Evaluate at a rational point (q = x); finite Laurent part requires x != 0
  // when negative exponents are present.
  Rational eval_at(const Rational& x) const;

  std::string str(const std::string& var = "q") const;

 private:
  std::map<long long, Rational> terms_;
  void add_term(long long e, const Rational& c);
  friend LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
};

// Monic-free gcd over Q[q]: the result is an ordinary polynomial with
// integer coefficients, content 1, and positive lowest-degree coefficient.
// gcd(0, 0) = 0.  Inputs may be Laurent; unit factors q^e are discarded.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// prod_{j=1}^{n} (1 - q^{s + j - 1}); the q-Pochhammer factor (q^s; q)_n
// expanded as a Laurent polynomial.  n < 0 is a domain error.
LaurentPoly pochhammer_poly(long long s, long long n);

}  // namespace qru

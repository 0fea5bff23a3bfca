#include "qru/rational_function.hpp"

#include <stdexcept>

namespace qru {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly::one();
    return;
  }
  // move the denominator's q-power into the numerator so den(0) != 0
  const long long dmin = den.min_exp();
  if (dmin != 0) {
    den.mul_monomial(1, -dmin);
    num.mul_monomial(1, -dmin);
  }
  LaurentPoly g = poly_gcd(num, den);
  if (!g.is_one()) {
    // num may carry a q^e unit; divide its ordinary part
    num = *num.divided_exactly_by(g);
    den = *den.divided_exactly_by(g);
  }
  // scale den to integer content 1 with positive lowest coefficient
  Integer den_lcm = 1;
  for (const auto& [e, c] : den.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Integer num_gcd = 0;
  for (const auto& [e, c] : den.terms()) {
    Integer scaled_num = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
  }
  Rational scale = make_rational(den_lcm, num_gcd);  // den * scale is primitive
  if (den.terms().begin()->second * scale < 0) scale = -scale;
  den.mul_scalar(scale);
  num.mul_scalar(scale);
  num_ = std::move(num);
  den_ = std::move(den);
}

const LaurentPoly& RationalFunction::as_laurent() const {
  if (!is_polynomial()) throw std::domain_error("rational function is not a Laurent polynomial");
  return num_;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RationalFunction rf_normalize(const LaurentPoly& num, const LaurentPoly& den) {
  return RationalFunction(num, den);
}

bool rf_cross_equal(const LaurentPoly& a, const LaurentPoly& b,
                    const LaurentPoly& c, const LaurentPoly& d) {
  if (b.is_zero() || d.is_zero()) throw std::domain_error("rf_cross_equal: zero denominator");
  return a * d == c * b;
}

}  // namespace qru

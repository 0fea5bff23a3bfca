#pragma once

#include "qru/laurent.hpp"

namespace qru {

// Quotient of Laurent polynomials kept in a unique canonical form:
//   - den is an ordinary polynomial, den(0) != 0 (all powers of q live in num),
//   - den has integer coefficients with content 1,
//   - den's lowest-degree coefficient is positive,
//   - gcd(num, den) = 1.
// With that form, equality is plain (num, den) equality.  Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(LaurentPoly::one()) {}
  RationalFunction(const LaurentPoly& numerator)  // NOLINT: deliberate implicit lift
      : num_(numerator), den_(LaurentPoly::one()) {}
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  // requires is_polynomial()
  const LaurentPoly& as_laurent() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { *this = *this + o; return *this; }
  RationalFunction& operator-=(const RationalFunction& o) { *this = *this - o; return *this; }
  RationalFunction& operator*=(const RationalFunction& o) { *this = *this * o; return *this; }
  RationalFunction& operator/=(const RationalFunction& o) { *this = *this / o; return *this; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string str(const std::string& var = "q") const;

 private:
  LaurentPoly num_, den_;
};

// Canonical reduced form of num/den; throws std::domain_error when den = 0.
RationalFunction rf_normalize(const LaurentPoly& num, const LaurentPoly& den);

// a/b == c/d by cross multiplication, no normalization involved.  Used by
// property tests as an independent oracle for the canonical equality.
bool rf_cross_equal(const LaurentPoly& a, const LaurentPoly& b,
                    const LaurentPoly& c, const LaurentPoly& d);

}  // namespace qru

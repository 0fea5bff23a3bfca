#include "qru/poch_fraction.hpp"

#include <stdexcept>
#include <utility>

namespace qru {

namespace {

// prod over the factor map of (1 - q^j)^{m_j}, expanded.
LaurentPoly expand_factors(const std::map<long long, int>& fs) {
  LaurentPoly out = LaurentPoly::one();
  for (const auto& [j, m] : fs) {
    LaurentPoly f = LaurentPoly::one();
    f -= LaurentPoly::monomial(Rational(1), j);
    for (int i = 0; i < m; ++i) out *= f;
  }
  return out;
}

}  // namespace

PochFraction& PochFraction::mul_scalar(const Rational& c) {
  num_.mul_scalar(c);
  if (num_.is_zero()) den_.clear();
  return *this;
}

PochFraction& PochFraction::mul_monomial(const Rational& c, long long e) {
  num_.mul_monomial(c, e);
  if (num_.is_zero()) den_.clear();
  return *this;
}

PochFraction& PochFraction::mul_laurent(const LaurentPoly& p) {
  num_ *= p;
  if (num_.is_zero()) den_.clear();
  return *this;
}

PochFraction& PochFraction::mul_factor(long long j, long long e) {
  if (e == 0) return *this;
  if (j == 0) {
    if (e < 0) throw std::domain_error("PochFraction: division by the zero factor 1 - q^0");
    num_ = LaurentPoly::zero();
    den_.clear();
    return *this;
  }
  if (j < 0) {
    // 1 - q^j = -q^j (1 - q^{-j})
    Rational sign = (e % 2 == 0) ? Rational(1) : Rational(-1);
    mul_monomial(sign, j * e);
    return mul_factor(-j, e);
  }
  if (e > 0) {
    auto it = den_.find(j);
    if (it != den_.end()) {
      long long cancel = std::min<long long>(it->second, e);
      it->second -= static_cast<int>(cancel);
      if (it->second == 0) den_.erase(it);
      e -= cancel;
    }
    LaurentPoly f = LaurentPoly::one();
    f -= LaurentPoly::monomial(Rational(1), j);
    for (long long i = 0; i < e; ++i) num_ *= f;
  } else if (!num_.is_zero()) {
    den_[j] += static_cast<int>(-e);
  }
  return *this;
}

PochFraction& PochFraction::mul_poch(long long s, long long n, int sign) {
  if (n < 0) throw std::invalid_argument("PochFraction::mul_poch: negative length");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("PochFraction::mul_poch: sign must be +1 or -1");
  for (long long i = 0; i < n; ++i) mul_factor(s + i, sign);
  return *this;
}

PochFraction& PochFraction::mul_one_plus(long long m, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("PochFraction::mul_one_plus: sign must be +1 or -1");
  if (m == 0) return mul_scalar(sign == 1 ? Rational(2) : Rational(1, 2));
  mul_factor(2 * m, sign);
  mul_factor(m, -sign);
  return *this;
}

PochFraction PochFraction::operator-() const {
  PochFraction out(*this);
  out.num_ = -out.num_;
  return out;
}

PochFraction& PochFraction::operator+=(const PochFraction& o) {
  // common denominator: factorwise maximum of the multiplicities
  std::map<long long, int> common = den_;
  for (const auto& [j, m] : o.den_) {
    int& slot = common[j];
    if (m > slot) slot = m;
  }
  std::map<long long, int> mine, theirs;
  for (const auto& [j, m] : common) {
    auto it = den_.find(j);
    int have = it == den_.end() ? 0 : it->second;
    if (m > have) mine[j] = m - have;
    auto oit = o.den_.find(j);
    have = oit == o.den_.end() ? 0 : oit->second;
    if (m > have) theirs[j] = m - have;
  }
  num_ = num_ * expand_factors(mine) + o.num_ * expand_factors(theirs);
  den_ = std::move(common);
  if (num_.is_zero()) den_.clear();
  return *this;
}

PochFraction& PochFraction::operator-=(const PochFraction& o) { return *this += -o; }

PochFraction operator*(const PochFraction& a, const PochFraction& b) {
  PochFraction out;
  out.num_ = a.num_ * b.num_;
  if (out.num_.is_zero()) return out;
  out.den_ = a.den_;
  for (const auto& [j, m] : b.den_) out.den_[j] += m;
  return out;
}

PochFraction PochFraction::substitute_inverse() const {
  // 1 / (1 - q^{-j})^m = (-1)^m q^{jm} / (1 - q^j)^m keeps the factor shape.
  PochFraction out;
  out.num_ = num_.substitute_inverse();
  out.den_ = den_;
  long long shift = 0;
  long long parity = 0;
  for (const auto& [j, m] : den_) {
    shift += j * m;
    parity += m;
  }
  out.num_.mul_monomial(parity % 2 == 0 ? Rational(1) : Rational(-1), shift);
  return out;
}

LaurentPoly PochFraction::to_laurent() const {
  LaurentPoly out = num_;
  for (const auto& [j, m] : den_) {
    LaurentPoly f = LaurentPoly::one();
    f -= LaurentPoly::monomial(Rational(1), j);
    for (int i = 0; i < m; ++i) {
      auto q = out.divided_exactly_by(f);
      if (!q)
        throw std::domain_error(
            "PochFraction::to_laurent: value is not a Laurent polynomial");
      out = std::move(*q);
    }
  }
  return out;
}

RationalFunction PochFraction::to_rational_function() const {
  return rf_normalize(num_, expand_factors(den_));
}

}  // namespace qru

#include "qru/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qru {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(Rational c, long long e) {
  LaurentPoly p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long long LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long long LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(long long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(long long e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  // iterate the sparser factor outermost
  const LaurentPoly& s = (a.terms_.size() <= b.terms_.size()) ? a : b;
  const LaurentPoly& t = (a.terms_.size() <= b.terms_.size()) ? b : a;
  for (const auto& [e1, c1] : s.terms_)
    for (const auto& [e2, c2] : t.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly& LaurentPoly::mul_scalar(const Rational& c) {
  if (c == 0) { terms_.clear(); return *this; }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly& LaurentPoly::mul_monomial(const Rational& c, long long e) {
  if (c == 0) { terms_.clear(); return *this; }
  std::map<long long, Rational> shifted;
  for (auto& [k, v] : terms_) shifted.emplace(k + e, v * c);
  terms_ = std::move(shifted);
  return *this;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::scale_exponents(long long s) const {
  if (s == 0) throw std::invalid_argument("scale_exponents: s must be nonzero");
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e * s] = c;
  return r;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {LaurentPoly(), LaurentPoly()};
  // normalize: pull out q^{min} from the divisor; compensate in the quotient
  const long long dshift = divisor.min_exp();
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const long long ddeg = divisor.max_exp() - dshift;
  const Rational& dlead = divisor.terms_.rbegin()->second;
  while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= ddeg) {
    const long long e = rem.max_exp();
    Rational c = rem.terms_.rbegin()->second / dlead;
    const long long qe = e - (ddeg + dshift);
    quot.add_term(qe, c);
    for (const auto& [de, dc] : divisor.terms_) rem.add_term(de + qe, -c * dc);
  }
  return {quot, rem};
}

std::optional<LaurentPoly> LaurentPoly::divided_exactly_by(const LaurentPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Rational LaurentPoly::eval_at(const Rational& x) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational pw = 1;
    long long k = e < 0 ? -e : e;
    if (e < 0 && x == 0) throw std::domain_error("eval_at: negative exponent at x = 0");
    Rational base = x;
    while (k > 0) {  // square-and-multiply keeps this cheap for large e
      if (k & 1) pw *= base;
      base *= base;
      k >>= 1;
    }
    if (e < 0) pw = Rational(1) / pw;
    acc += c * pw;
  }
  return acc;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool unit = (a == 1);
    if (e == 0) {
      os << a.get_str();
    } else {
      if (!unit) os << a.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

// dense integer polynomial helpers for the primitive-PRS gcd
using ZPoly = std::vector<Integer>;  // coefficient of x^i at index i; trimmed

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_scalar(ZPoly& p, const Integer& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// pseudo-remainder of a by b (deg a >= deg b >= 0), in place on a copy
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const Integer& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    Integer la = a.back();
    const auto shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    trim(a);
  }
  return a;
}

void make_primitive(ZPoly& p) {
  trim(p);
  if (p.empty()) return;
  Integer g = content(p);
  if (g != 0 && g != 1) divide_scalar(p, g);
  // sign convention: positive lowest-degree coefficient
  for (const auto& c : p) {
    if (c != 0) {
      if (c < 0)
        for (auto& x : p) x = -x;
      break;
    }
  }
}

// convert a Laurent poly to a primitive integer polynomial, dropping the
// unit q^{min} factor and scaling out denominators
ZPoly to_primitive_zpoly(const LaurentPoly& p) {
  ZPoly out;
  if (p.is_zero()) return out;
  const long long lo = p.min_exp();
  const long long hi = p.max_exp();
  Integer den_lcm = 1;
  for (const auto& [e, c] : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  out.assign(static_cast<size_t>(hi - lo + 1), Integer(0));
  for (const auto& [e, c] : p.terms()) {
    Rational scaled = c * Rational(den_lcm);
    out[static_cast<size_t>(e - lo)] = scaled.get_num();
  }
  make_primitive(out);
  return out;
}

LaurentPoly from_zpoly(const ZPoly& p) {
  LaurentPoly out;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) out += LaurentPoly::monomial(Rational(p[i]), static_cast<long long>(i));
  return out;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  ZPoly A = to_primitive_zpoly(a);
  ZPoly B = to_primitive_zpoly(b);
  if (A.empty()) { make_primitive(B); return from_zpoly(B); }
  if (B.empty()) return from_zpoly(A);
  if (A.size() < B.size()) std::swap(A, B);
  // primitive polynomial remainder sequence
  while (!B.empty()) {
    ZPoly R = pseudo_rem(A, B);
    make_primitive(R);
    A = std::move(B);
    B = std::move(R);
  }
  make_primitive(A);
  return from_zpoly(A);
}

LaurentPoly pochhammer_poly(long long s, long long n) {
  if (n < 0) throw std::domain_error("pochhammer_poly: negative length");
  LaurentPoly acc = LaurentPoly::one();
  for (long long j = 0; j < n; ++j)
    acc *= LaurentPoly::one() - LaurentPoly::monomial(1, s + j);
  return acc;
}

}  // namespace qru

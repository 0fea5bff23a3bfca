#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qru/laurent.hpp"
#include "qru/rational.hpp"

namespace qru {

// Euler totient of n >= 1.
long long euler_phi(long long n);

// The minimal polynomial of a primitive L-th root of unity, computed by
// exact division of x^L - 1 by the proper-divisor factors.  Results are
// memoized process-wide; the cache is safe for concurrent use and its
// footprint is capped by the QRU_PHI_CACHE_MB environment variable
// (default 64).  Returned by value so callers never hold cache references.
LaurentPoly cyclotomic_polynomial(long long L);

// An element of the field of L-th roots of unity, stored as rational
// coordinates on 1, z, ..., z^{L-1} where z = e^{2*pi*i/L}, i.e. as a
// residue modulo x^L - 1.  The representation is redundant (x^L - 1 is not
// irreducible); arithmetic stays cheap in it and zero/equality tests reduce
// modulo the minimal polynomial.  Elements of different orders never mix:
// arithmetic on mismatched orders throws std::invalid_argument.
class Cyclotomic {
 public:
  // zero of order 1
  Cyclotomic() : order_(1), coords_(1, Rational(0)) {}

  static Cyclotomic zero(long long order);
  static Cyclotomic one(long long order);
  static Cyclotomic from_rational(const Rational& value, long long order);
  // c * z^e; e taken mod order (negatives wrap)
  static Cyclotomic monomial(const Rational& c, long long e, long long order);
  // z^e
  static Cyclotomic root(long long order, long long e = 1) {
    return monomial(Rational(1), e, order);
  }

  long long order() const { return order_; }
  const std::vector<Rational>& coords() const { return coords_; }
  // Number of nonzero entries in the residue representation.
  long long support_size() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic operator-() const;
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { a += b; return a; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { a -= b; return a; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

  Cyclotomic& mul_scalar(const Rational& c);
  // multiply by z^e: a cyclic shift of the coordinates
  Cyclotomic& mul_root(long long e);
  // add c * z^e in place; e taken mod order
  Cyclotomic& add_term(const Rational& c, long long e);

  // True iff the element is 0 in the field, i.e. the residue vanishes
  // modulo the order-L minimal polynomial.  Runs a sparse recursive
  // decomposition over the prime factors of L, so very sparse elements
  // (the common case here) test in time proportional to their support.
  bool is_zero() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Multiplicative inverse via the extended Euclidean algorithm modulo the
  // minimal polynomial.  Throws std::domain_error on zero.
  Cyclotomic inverse() const;
  // Integer power; negative e inverts first.
  Cyclotomic power(long long e) const;

  // Field automorphism z -> z^t for gcd(t, order) = 1; t = -1 is complex
  // conjugation.  Throws std::invalid_argument when t is not a unit.
  Cyclotomic apply_automorphism(long long t) const;

  // The unique coordinates on the power basis 1, z, ..., z^{phi(L)-1} of
  // the field, i.e. the residue reduced modulo the minimal polynomial.
  // Equal field values have identical canonical coordinates.
  std::vector<Rational> canonical_coords() const;

  // Canonical form printed as a polynomial in z with ascending exponents,
  // e.g. "1 - 1/2*z^3".  The variable name defaults to z<order>.
  std::string str() const;
  std::string str(const std::string& var) const;

  // Numeric embedding with z = exp(2*pi*i/order); used by tests as an
  // independent floating-point oracle, never by the exact pipeline.
  std::complex<double> to_complex() const;

 private:
  Cyclotomic(long long order, std::vector<Rational> coords)
      : order_(order), coords_(std::move(coords)) {}
  void check_same_order(const Cyclotomic& o) const;

  long long order_;
  std::vector<Rational> coords_;
};

// Image of x under the inclusion of the order-N field into the order-L
// field, N | L: z_N -> z_L^{L/N}.  Throws std::invalid_argument otherwise.
Cyclotomic cyc_embed(const Cyclotomic& x, long long big_order);

// The value e^{2*pi*i*M*r/N} as an element of the order-L field: with
// r = a/b in lowest terms this is z_L^{M*a*(L/(b*N))}, which exists iff
// b*N | L.  Requires gcd(M, N) = 1; violations throw std::invalid_argument.
Cyclotomic root_power(long long M, long long N, const Rational& r, long long L);

// f(z_N^M) computed term by term in the order-L field (N | L); negative
// exponents use the inverse root, which is again a power of the root.
Cyclotomic eval_laurent_at_root(const LaurentPoly& f, long long M, long long N,
                                long long L);

}  // namespace qru

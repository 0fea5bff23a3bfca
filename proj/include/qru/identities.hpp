#pragma once

#include <vector>

#include "qru/bailey.hpp"
#include "qru/eichler.hpp"
#include "qru/record.hpp"

namespace qru {

// Ties one nested-sum family to the data of its limiting-value identity:
// the character shape (2,3,p3), (1,1,l3) and the rational prefactor
// exponent delta in  H = -1/2 * q^delta * (limiting weighted sum).
struct MainFamilyParams {
  int family;         // 1..10
  long long p;        // depth parameter, >= 1
  long long p3;       // 6p-1 for families 1..5, 6p+1 for families 6..10
  long long l3;
  Rational delta;
  bool special_case;  // family 1 at p = 1 carries an extra -zeta^{-M} term
};

// The parameter row for (family, p).  Throws std::invalid_argument for
// family outside 1..10 or p < 1.
MainFamilyParams main_family_params(int family, long long p);

// Finite correction polynomials entering three of the bridge identities;
// each branches on the argument mod 3.  At a primitive N-th root of unity
// they collapse to -1, -1 and (-1)^{N+1} respectively (tested lemmas).
LaurentPoly correction_lambda(long long N);  // N >= 1
LaurentPoly correction_gamma(long long k);   // k >= 0
LaurentPoly correction_kappa(long long N);   // N >= 1

// The square constant c of the bridge identity for (family, p): its chi
// side sums chi(n) q^{(n^2 - c)/(4P)}.
long long bridge_constant(int family, long long p);

// The two sides of the bridge identity as exact Laurent polynomials in q.
// The left side is a signed alpha-sum (with star/hat transforms and
// correction terms where the family requires them); the right side is the
// shifted chi-sum over 0 <= n <= 2 p3 N.
LaurentPoly bridge_lhs(int family, long long p, long long N);
LaurentPoly bridge_rhs(int family, long long p, long long N);

// sign * sum_{n=0}^{bound} chi(n) q^{(n^2 - c)/(2 * period)}, exposed with
// an explicit character so tests can feed perturbed tables.  Throws
// std::domain_error when some supported n yields a nonintegral exponent.
LaurentPoly chi_shifted_sum(const ChiFunction& chi, long long c,
                            long long bound, int sign);

// Compares bridge_lhs against bridge_rhs exactly (record with L = M = 0 and
// the polynomials serialized termwise).
VerificationRecord verify_poly_identity(int family, long long p, long long N);

// Compares the nested sum at zeta_N^M against -1/2 q^delta times the
// limiting weighted chi-sum, in the field of order 24 p3 N.
VerificationRecord verify_main(int family, long long p, long long M,
                               long long N);

// The single-parameter instances that were conjectured individually, all at
// M = 1: (family, p) in {(2,2), (3,2), (4,1), (4,2), (5,1), (5,2), (5,3),
// (6,1), (7,1)}, each run for N = 1..n_max in that order.
std::vector<VerificationRecord> verify_conjecture_suite(long long n_max);

}  // namespace qru

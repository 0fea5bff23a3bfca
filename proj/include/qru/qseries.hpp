#pragma once

#include "qru/cyclotomic.hpp"
#include "qru/laurent.hpp"

namespace qru {

// A primitive N-th root of unity e^{2*pi*i*M/N}.  Construction validates
// gcd(M, N) = 1 and N >= 1; M may be any representative of its class mod N.
struct RootOfUnity {
  long long M;
  long long N;
  RootOfUnity(long long m, long long n);
};

// (q^s; q)_n = prod_{k=1}^{n} (1 - q^{s+k-1}); empty product for n = 0.
LaurentPoly q_pochhammer(long long s, long long n);

// Gaussian binomial [n, k] = (q)_n / ((q)_{n-k} (q)_k) as an ordinary
// polynomial; zero for k < 0 or k > n.  Values are memoized through the
// Pascal recurrence; the table is safe for concurrent use.
LaurentPoly q_binomial(long long n, long long k);

// The value of (q^{start}; q)_{count} at q = z_N^M, in the order-N field.
Cyclotomic q_pochhammer_at_root(long long start, long long count, const RootOfUnity& z);

// One of the ten nested q-hypergeometric families, evaluated exactly at a
// root of unity.  The sum runs over weakly decreasing nonnegative chains
// n_p >= ... >= n_1 with a family-specific outer term in n_p and chain
// weights in the inner indices; every term with n_p >= N vanishes at a
// primitive N-th root (the outer Pochhammer factor covers a full window of
// N consecutive exponents), so enumeration stops at n_p = N - 1.
Cyclotomic multisum_eval(int family, long long p, const RootOfUnity& z);

// Same sum with an explicit outer enumeration bound (terms n_p < bound);
// exists so tests can confirm that enlarging the window beyond N changes
// nothing.
Cyclotomic multisum_eval_bounded(int family, long long p, const RootOfUnity& z,
                                 long long bound);

// Sum_{n >= 0} q^n (q^{n+1})_{n+1} at q = z_N^M; terms with n >= N vanish.
Cyclotomic habiro_poincare_eval(const RootOfUnity& z);

// Quantum invariant of the Brieskorn sphere obtained from sign-labelled
// surgery: family 1 (sign -1, requires p >= 2) or family 8 (sign +1)
// divided exactly by (1 - z_N^M).  N = 1 makes the divisor vanish, which is
// a domain error.
Cyclotomic wrt_invariant(int sign, long long p, const RootOfUnity& z);

}  // namespace qru

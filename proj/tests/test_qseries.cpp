#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "qru/cyclotomic.hpp"
#include "qru/laurent.hpp"
#include "qru/qseries.hpp"

using qru::Cyclotomic;
using qru::LaurentPoly;
using qru::Rational;
using qru::RootOfUnity;

namespace {

std::complex<double> unit_root(long long M, long long N) {
  const double pi = 3.14159265358979323846;
  double t = 2.0 * pi * static_cast<double>(M) / static_cast<double>(N);
  return {std::cos(t), std::sin(t)};
}

// (q^s; q)_n numerically, independent of the exact code paths.
std::complex<double> poch_c(std::complex<double> q, long long s, long long n) {
  std::complex<double> acc = 1.0;
  std::complex<double> f = std::pow(q, static_cast<double>(s));
  for (long long i = 0; i < n; ++i) {
    acc *= (1.0 - f);
    f *= q;
  }
  return acc;
}

std::complex<double> binom_c(std::complex<double> q, long long n, long long k) {
  // Product form; every denominator factor 1 - q^j has 1 <= j <= n < order,
  // so nothing vanishes for the arguments used below.
  std::complex<double> acc = 1.0;
  for (long long j = 1; j <= k; ++j)
    acc *= (1.0 - std::pow(q, static_cast<double>(n - k + j))) /
           (1.0 - std::pow(q, static_cast<double>(j)));
  return acc;
}

struct ShapeC {
  long long quad, lin;
  int start_off, len_off;
  bool square;
};

ShapeC shape_of(int family) {
  static const ShapeC t[10] = {
      {0, 1, 1, 1, false}, {0, 1, 0, 0, true},   {0, 2, 1, 0, false},
      {0, 1, 1, 0, false}, {0, 1, 1, 0, true},   {-1, 0, 1, 0, false},
      {-1, -1, 1, 0, false}, {-1, -2, 1, 1, false}, {-1, -1, 1, 0, true},
      {-1, 0, 0, 0, true},
  };
  return t[family - 1];
}

// Direct nested enumeration over chains for p <= 2, entirely in doubles.
std::complex<double> multisum_c(int family, long long p, long long M, long long N) {
  ShapeC s = shape_of(family);
  std::complex<double> q = unit_root(M, N);
  auto pre = [&](long long t) {
    return std::pow(q, static_cast<double>(s.quad * t * t + s.lin * t)) *
           poch_c(q, t + s.start_off, t + s.len_off);
  };
  auto w = [&](long long n) {
    return std::pow(q, static_cast<double>(s.square ? n * n : n * (n + 1)));
  };
  std::complex<double> total = 0.0;
  for (long long t = 0; t < N; ++t) {
    if (p == 1) {
      total += pre(t);
    } else {
      std::complex<double> inner = 0.0;
      for (long long n = 0; n <= t; ++n) inner += w(n) * binom_c(q, t, n);
      total += pre(t) * inner;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("root-of-unity parameter validation") {
  CHECK_NOTHROW(RootOfUnity(1, 1));
  CHECK_NOTHROW(RootOfUnity(5, 1));
  CHECK_NOTHROW(RootOfUnity(-1, 4));
  CHECK_NOTHROW(RootOfUnity(7, 12));
  CHECK_THROWS_AS(RootOfUnity(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(RootOfUnity(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootOfUnity(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(RootOfUnity(3, -6), std::invalid_argument);
}

TEST_CASE("gaussian binomial small values") {
  CHECK(qru::q_binomial(0, 0).is_one());
  CHECK(qru::q_binomial(5, 0).is_one());
  CHECK(qru::q_binomial(5, 5).is_one());
  CHECK(qru::q_binomial(4, 7).is_zero());
  CHECK(qru::q_binomial(4, -1).is_zero());

  LaurentPoly b21 = LaurentPoly::one();
  b21 += LaurentPoly::monomial(Rational(1), 1);
  CHECK(qru::q_binomial(2, 1) == b21);

  // [4, 2] = 1 + q + 2 q^2 + q^3 + q^4
  LaurentPoly b42 = LaurentPoly::one();
  b42 += LaurentPoly::monomial(Rational(1), 1);
  b42 += LaurentPoly::monomial(Rational(2), 2);
  b42 += LaurentPoly::monomial(Rational(1), 3);
  b42 += LaurentPoly::monomial(Rational(1), 4);
  CHECK(qru::q_binomial(4, 2) == b42);
}

TEST_CASE("gaussian binomial symmetry and recurrence") {
  for (long long n = 0; n <= 20; ++n)
    for (long long k = 0; k <= n; ++k) {
      CHECK(qru::q_binomial(n, k) == qru::q_binomial(n, n - k));
      if (n >= 1) {
        LaurentPoly rhs = qru::q_binomial(n - 1, k - 1);
        rhs += LaurentPoly::monomial(Rational(1), k) * qru::q_binomial(n - 1, k);
        CHECK(qru::q_binomial(n, k) == rhs);
      }
    }
}

TEST_CASE("gaussian binomial matches the factorial quotient") {
  for (long long n = 0; n <= 14; ++n)
    for (long long k = 0; k <= n; ++k) {
      LaurentPoly lhs = qru::q_binomial(n, k) * qru::q_pochhammer(1, k) *
                        qru::q_pochhammer(1, n - k);
      CHECK(lhs == qru::q_pochhammer(1, n));
    }
}

TEST_CASE("pochhammer shift splits off the top factors") {
  // (q^s)_{n-k} * (q^{1-n-s})_k == (q^s)_n * (-1)^k q^{k(1-s) + k(k-1)/2 - nk}
  for (long long s = 1; s <= 3; ++s)
    for (long long n = 0; n <= 12; ++n)
      for (long long k = 0; k <= n; ++k) {
        LaurentPoly lhs = qru::q_pochhammer(s, n - k) * qru::q_pochhammer(1 - n - s, k);
        Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        long long e = k * (1 - s) + k * (k - 1) / 2 - n * k;
        LaurentPoly rhs = qru::q_pochhammer(s, n) * LaurentPoly::monomial(sign, e);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("pochhammer value at a root matches the generic polynomial") {
  std::mt19937_64 rng(2601);
  for (int trial = 0; trial < 60; ++trial) {
    long long N = 1 + static_cast<long long>(rng() % 12);
    long long M = 1 + static_cast<long long>(rng() % N);
    while (std::gcd(M, N) != 1) M = 1 + static_cast<long long>(rng() % N);
    long long start = static_cast<long long>(rng() % 9) - 2;
    long long count = static_cast<long long>(rng() % 8);
    RootOfUnity z(M, N);
    Cyclotomic direct = qru::q_pochhammer_at_root(start, count, z);
    Cyclotomic generic =
        qru::eval_laurent_at_root(qru::q_pochhammer(start, count), M, N, N);
    CHECK(direct == generic);
  }
  CHECK_THROWS_AS(qru::q_pochhammer_at_root(1, -1, RootOfUnity(1, 3)),
                  std::domain_error);
}

TEST_CASE("nested sums collapse at order one") {
  RootOfUnity one(1, 1);
  for (long long p = 1; p <= 3; ++p)
    for (int family = 1; family <= 10; ++family) {
      Cyclotomic v = qru::multisum_eval(family, p, one);
      long expect = (family == 1 || family == 8) ? 0 : 1;
      CHECK(v == Cyclotomic::from_rational(Rational(expect), 1));
    }
}

TEST_CASE("nested sum hand-checked values") {
  // family 2, p = 1 at the cube root: 1 + q(1-q) + q^2(1-q^2)(1-q^3)
  //                                 = 1 + q - q^2 = 2 + 2 q mod q^2+q+1.
  Cyclotomic v = qru::multisum_eval(2, 1, RootOfUnity(1, 3));
  Cyclotomic expect = Cyclotomic::from_rational(Rational(2), 3);
  expect.add_term(Rational(2), 1);
  CHECK(v == expect);

  // family 1, p = 1 at q = -1: (1-q) + q(1-q^2)(1-q^3) = 2.
  CHECK(qru::multisum_eval(1, 1, RootOfUnity(1, 2)) ==
        Cyclotomic::from_rational(Rational(2), 2));

  // family 2, p = 2 at q = -1: t=0 gives 1; t=1 gives q(1-q)(1 + q) = 0.
  CHECK(qru::multisum_eval(2, 2, RootOfUnity(1, 2)) ==
        Cyclotomic::from_rational(Rational(1), 2));

  CHECK_THROWS_AS(qru::multisum_eval(0, 1, RootOfUnity(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(qru::multisum_eval(11, 1, RootOfUnity(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(qru::multisum_eval(2, 0, RootOfUnity(1, 2)), std::invalid_argument);
}

TEST_CASE("nested sums agree with a direct numeric enumeration") {
  for (int family = 1; family <= 10; ++family)
    for (long long p = 1; p <= 2; ++p)
      for (long long N = 1; N <= 6; ++N)
        for (long long M = 1; M <= N; ++M) {
          if (std::gcd(M, N) != 1) continue;
          Cyclotomic exact = qru::multisum_eval(family, p, RootOfUnity(M, N));
          std::complex<double> expect = multisum_c(family, p, M, N);
          std::complex<double> got = exact.to_complex();
          CHECK(std::abs(got - expect) < 1e-9);
        }
}

TEST_CASE("enlarging the enumeration window changes nothing") {
  for (int family = 1; family <= 10; ++family)
    for (long long p = 1; p <= 2; ++p)
      for (long long N = 2; N <= 8; N += 2) {
        RootOfUnity z(N - 1, N);  // a nontrivial primitive root for N >= 3
        Cyclotomic tight = qru::multisum_eval(family, p, z);
        Cyclotomic wide = qru::multisum_eval_bounded(family, p, z, 2 * N);
        CHECK(tight == wide);
      }
}

TEST_CASE("conjugating the root conjugates the nested sum") {
  for (int family : {1, 2, 5, 8, 10})
    for (long long N = 2; N <= 8; ++N) {
      RootOfUnity fwd(1, N), bwd(-1, N);
      Cyclotomic a = qru::multisum_eval(family, 2, bwd);
      Cyclotomic b = qru::multisum_eval(family, 2, fwd).apply_automorphism(-1);
      CHECK(a == b);
    }
}

TEST_CASE("single-sum evaluation anchors the family-two nested sum") {
  // sum_n q^n (q^{n+1})_{n+1} relates to family 2 through 1 + q*S = H.
  CHECK(qru::habiro_poincare_eval(RootOfUnity(1, 1)) ==
        Cyclotomic::zero(1));
  CHECK(qru::habiro_poincare_eval(RootOfUnity(1, 2)) ==
        Cyclotomic::from_rational(Rational(2), 2));
  for (long long N = 1; N <= 10; ++N)
    for (long long M = 1; M <= N; ++M) {
      if (std::gcd(M, N) != 1) continue;
      RootOfUnity z(M, N);
      Cyclotomic s = qru::habiro_poincare_eval(z);
      s.mul_root(M);
      s += Cyclotomic::one(N);
      CHECK(s == qru::multisum_eval(2, 1, z));
    }
}

TEST_CASE("quantum invariant divides out the root factor exactly") {
  for (long long N : {2, 3, 5, 7}) {
    RootOfUnity z(1, N);
    Cyclotomic one_minus = Cyclotomic::one(N) - Cyclotomic::root(N, 1);
    CHECK(qru::wrt_invariant(1, 1, z) * one_minus == qru::multisum_eval(8, 1, z));
    CHECK(qru::wrt_invariant(-1, 2, z) * one_minus == qru::multisum_eval(1, 2, z));
  }
  CHECK_THROWS_AS(qru::wrt_invariant(1, 1, RootOfUnity(1, 1)), std::domain_error);
  CHECK_THROWS_AS(qru::wrt_invariant(-1, 1, RootOfUnity(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(qru::wrt_invariant(0, 1, RootOfUnity(1, 3)), std::invalid_argument);
}

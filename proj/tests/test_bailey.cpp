#include <numeric>

#include "doctest.h"
#include "qru/bailey.hpp"

using qru::BaileyPair;
using qru::ChainVariant;
using qru::Cyclotomic;
using qru::LaurentPoly;
using qru::PochFraction;
using qru::Rational;
using qru::RootOfUnity;

TEST_CASE("built-in pairs satisfy the defining sums") {
  for (int id = 1; id <= 10; ++id) {
    BaileyPair bp = qru::bailey_pair(id);
    CAPTURE(id);
    CHECK(qru::verify_pair(bp, 6));
  }
  CHECK_THROWS_AS(qru::bailey_pair(0), std::invalid_argument);
  CHECK_THROWS_AS(qru::bailey_pair(11), std::invalid_argument);
}

TEST_CASE("corrupted pairs are rejected quickly") {
  BaileyPair bad_alpha = qru::bailey_pair(1);
  qru::PochSeq orig_a = bad_alpha.alpha;
  bad_alpha.alpha = [orig_a](long long k) {
    PochFraction t = orig_a(k);
    if (k == 1) t.mul_monomial(Rational(1), 1);
    return t;
  };
  CHECK_FALSE(qru::verify_pair(bad_alpha, 2));

  BaileyPair bad_beta = qru::bailey_pair(5);
  qru::PochSeq orig_b = bad_beta.beta;
  bad_beta.beta = [orig_b](long long k) {
    PochFraction t = orig_b(k);
    if (k == 2) t.mul_scalar(Rational(-1));
    return t;
  };
  CHECK_FALSE(qru::verify_pair(bad_beta, 2));
}

TEST_CASE("the two beta reconstructions agree on derived pairs") {
  BaileyPair lifted = qru::bailey_lemma(qru::bailey_pair(3));
  for (long long n = 0; n <= 5; ++n)
    CHECK(qru::pair_beta_from_alpha(lifted, n) == qru::pair_beta_alternate(lifted, n));
}

TEST_CASE("the lemma transform preserves the pair property") {
  CHECK(qru::verify_pair(qru::bailey_lemma(qru::bailey_pair(3)), 5));
  CHECK(qru::verify_pair(qru::bailey_lemma(qru::bailey_pair(8)), 5));
}

TEST_CASE("the lattice turns base q^2 pairs into base q pairs") {
  CHECK(qru::verify_pair(qru::bailey_lattice(qru::bailey_pair(7)), 5));
  CHECK(qru::verify_pair(qru::bailey_lattice(qru::bailey_pair(9)), 5));
  CHECK_THROWS_AS(qru::bailey_lattice(qru::bailey_pair(2)), std::invalid_argument);
}

TEST_CASE("the plus-minus transform maps pair four to pair nine") {
  LaurentPoly minus_q = LaurentPoly::monomial(Rational(-1), 1);
  BaileyPair got = qru::dagger_transform(qru::bailey_pair(4), minus_q);
  BaileyPair expect = qru::bailey_pair(9);
  CHECK(got.rel == 2);
  for (long long k = 0; k <= 15; ++k) {
    CAPTURE(k);
    CHECK(got.alpha(k) == expect.alpha(k));
    CHECK(got.beta(k) == expect.beta(k));
  }
  CHECK(qru::verify_pair(got, 4));

  CHECK_THROWS_AS(qru::dagger_transform(qru::bailey_pair(7), minus_q),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      qru::dagger_transform(qru::bailey_pair(4), LaurentPoly::monomial(Rational(1), 1)),
      std::invalid_argument);
}

TEST_CASE("duality maps pair nine to pair ten and is an involution") {
  BaileyPair nine = qru::bailey_pair(9);
  BaileyPair ten = qru::bailey_pair(10);
  BaileyPair dual9 = qru::dual_pair(nine);
  BaileyPair back = qru::dual_pair(dual9);
  for (long long k = 0; k <= 15; ++k) {
    CAPTURE(k);
    CHECK(dual9.alpha(k) == ten.alpha(k));
    CHECK(dual9.beta(k) == ten.beta(k));
    CHECK(back.alpha(k) == nine.alpha(k));
    CHECK(back.beta(k) == nine.beta(k));
  }
  CHECK_THROWS_AS(qru::dual_pair(qru::bailey_pair(1)), std::invalid_argument);
}

TEST_CASE("inverting q in the double-length factorial") {
  for (long long k = 0; k <= 8; ++k) {
    LaurentPoly lhs = qru::q_pochhammer(2, 2 * k).substitute_inverse();
    LaurentPoly rhs = qru::q_pochhammer(2, 2 * k);
    rhs.mul_monomial(Rational(1), -2 * k * k - 3 * k);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("chained sums match their single-sum forms") {
  for (long long p = 1; p <= 2; ++p)
    for (long long n = 1; n <= 4; ++n) {
      for (int id = 1; id <= 6; ++id) {
        CAPTURE(id);
        CAPTURE(p);
        CAPTURE(n);
        CHECK(qru::verify_chained_sum(qru::bailey_pair(id), p, n, ChainVariant::rel_q));
      }
      for (int id : {7, 8}) {
        CAPTURE(id);
        CHECK(qru::verify_chained_sum(qru::bailey_pair(id), p, n,
                                      ChainVariant::rel_q2_star));
      }
      for (int id : {9, 10}) {
        CAPTURE(id);
        CHECK(qru::verify_chained_sum(qru::bailey_pair(id), p, n,
                                      ChainVariant::rel_q2_plain));
      }
    }
  CHECK_THROWS_AS(
      qru::verify_chained_sum(qru::bailey_pair(1), 1, 2, ChainVariant::rel_q2_star),
      std::invalid_argument);
  CHECK_THROWS_AS(
      qru::verify_chained_sum(qru::bailey_pair(7), 1, 2, ChainVariant::rel_q),
      std::invalid_argument);
}

TEST_CASE("closed forms reproduce the nested sums at roots of unity") {
  for (int id = 1; id <= 10; ++id)
    for (long long p = 1; p <= 2; ++p)
      for (long long N = 1; N <= 6; ++N)
        for (long long M = 1; M <= N; ++M) {
          if (std::gcd(M, N) != 1) continue;
          CAPTURE(id);
          CAPTURE(p);
          CAPTURE(N);
          CAPTURE(M);
          CHECK(qru::verify_closed_form(id, p, RootOfUnity(M, N)));
        }
}

TEST_CASE("closed-form hand anchors") {
  RootOfUnity minus_one(1, 2);
  CHECK(qru::closed_form_eval(1, 1, minus_one) ==
        Cyclotomic::from_rational(Rational(1), 2));
  CHECK(qru::closed_form_eval(7, 1, minus_one) ==
        Cyclotomic::from_rational(Rational(1), 2));
  CHECK(qru::closed_form_eval(9, 1, minus_one) ==
        Cyclotomic::from_rational(Rational(-1), 2));
  CHECK(qru::closed_form_eval(10, 1, minus_one) ==
        Cyclotomic::from_rational(Rational(-1), 2));
  CHECK(qru::closed_form_eval(6, 2, minus_one) ==
        Cyclotomic::from_rational(Rational(2), 2));
}

TEST_CASE("closed forms four and seven agree exactly when their sums coincide") {
  // The single-sum targets of pairs 4 and 7 share the same outer term; their
  // inner chain weights differ (n^2+n versus n^2), so the nested sums are
  // equal for p = 1 and genuinely different for p >= 2.
  CHECK(qru::closed_form_family(4) == 4);
  CHECK(qru::closed_form_family(7) == 5);
  for (long long N = 1; N <= 6; ++N)
    for (long long M = 1; M <= N; ++M) {
      if (std::gcd(M, N) != 1) continue;
      RootOfUnity z(M, N);
      CHECK(qru::closed_form_eval(4, 1, z) == qru::closed_form_eval(7, 1, z));
    }
  RootOfUnity z3(1, 3);
  CHECK_FALSE(qru::closed_form_eval(4, 2, z3) == qru::closed_form_eval(7, 2, z3));
  CHECK(qru::multisum_eval(4, 2, z3) == qru::closed_form_eval(4, 2, z3));
  CHECK(qru::multisum_eval(5, 2, z3) == qru::closed_form_eval(7, 2, z3));
}

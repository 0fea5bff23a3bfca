#include "qru/identities.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qru {

namespace {

Rational frac(long long num, long long den = 1) {
  return make_rational(static_cast<long>(num), static_cast<long>(den));
}

// Which built-in pair drives the alpha-sum of each family.
constexpr int kPairForFamily[11] = {0, 6, 9, 3, 4, 7, 1, 2, 5, 8, 10};

}  // namespace

MainFamilyParams main_family_params(int family, long long p) {
  if (family < 1 || family > 10)
    throw std::invalid_argument("main_family_params: family must be 1..10");
  if (p < 1) throw std::invalid_argument("main_family_params: p must be >= 1");
  const long long lo = 6 * p - 1;
  const long long hi = 6 * p + 1;
  MainFamilyParams mp;
  mp.family = family;
  mp.p = p;
  mp.special_case = (family == 1 && p == 1);
  switch (family) {
    case 1:
      mp.p3 = lo; mp.l3 = 1;
      mp.delta = frac(-(6 * p + 5) * (6 * p + 5), 24 * lo);
      break;
    case 2:
      mp.p3 = lo; mp.l3 = p;
      mp.delta = frac(-1, 24 * lo);
      break;
    case 3:
      mp.p3 = lo; mp.l3 = 2 * p - 1;
      mp.delta = frac(-1) + frac(-(6 * p - 5) * (6 * p - 5), 24 * lo);
      break;
    case 4:
      mp.p3 = lo; mp.l3 = 2 * p;
      mp.delta = frac(-(6 * p + 1) * (6 * p + 1), 24 * lo);
      break;
    case 5:
      mp.p3 = lo; mp.l3 = 3 * p - 1;
      mp.delta = frac(p - 1) + frac(-(12 * p - 5) * (12 * p - 5), 24 * lo);
      break;
    case 6:
      mp.p3 = hi; mp.l3 = 2 * p;
      mp.delta = frac(-(6 * p - 1) * (6 * p - 1), 24 * hi);
      break;
    case 7:
      mp.p3 = hi; mp.l3 = 2 * p + 1;
      mp.delta = frac(1) + frac(-(6 * p + 5) * (6 * p + 5), 24 * hi);
      break;
    case 8:
      mp.p3 = hi; mp.l3 = 1;
      mp.delta = frac(1) + frac(-(6 * p - 5) * (6 * p - 5), 24 * hi);
      break;
    case 9:
      mp.p3 = hi; mp.l3 = 3 * p;
      mp.delta = frac(p) + frac(-(12 * p - 1) * (12 * p - 1), 24 * hi);
      break;
    default:
      mp.p3 = hi; mp.l3 = p;
      mp.delta = frac(-1, 24 * hi);
      break;
  }
  return mp;
}

LaurentPoly correction_lambda(long long N) {
  if (N < 1) throw std::invalid_argument("correction_lambda: N must be >= 1");
  LaurentPoly out = LaurentPoly::monomial(frac(-2), 0);
  const long long r = N / 3;
  const Rational sgn = frac(r % 2 == 0 ? 1 : -1);
  switch (N % 3) {
    case 0:
      out += LaurentPoly::monomial(sgn, (15 * r * r + r) / 2);
      out += LaurentPoly::monomial(sgn, (15 * r * r - r) / 2);
      break;
    case 1:
      out += LaurentPoly::monomial(sgn, (15 * r * r + 11 * r + 2) / 2);
      break;
    default:
      out += LaurentPoly::monomial(-sgn, (15 * r * r + 19 * r + 6) / 2);
      break;
  }
  return out;
}

LaurentPoly correction_gamma(long long k) {
  if (k < 0) throw std::invalid_argument("correction_gamma: k must be >= 0");
  switch (k % 3) {
    case 2: {  // k = 3r - 1
      const long long r = (k + 1) / 3;
      return LaurentPoly::monomial(frac(1), 3 * r * r - 2 * r) +
             LaurentPoly::monomial(frac(1), 3 * r * r - r);
    }
    case 0: {  // k = 3r
      const long long r = k / 3;
      return LaurentPoly::monomial(frac(-1), 3 * r * r + r);
    }
    default: {  // k = 3r + 1
      const long long r = (k - 1) / 3;
      return LaurentPoly::monomial(frac(-1), 3 * r * r + 2 * r);
    }
  }
}

LaurentPoly correction_kappa(long long N) {
  if (N < 1) throw std::invalid_argument("correction_kappa: N must be >= 1");
  switch (N % 3) {
    case 0: {
      const long long r = N / 3;
      return LaurentPoly::monomial(frac(-1), r * (3 * r - 1) / 2) +
             LaurentPoly::monomial(frac(-1), r * (3 * r + 1) / 2);
    }
    case 1: {
      const long long r = (N - 1) / 3;
      return LaurentPoly::monomial(frac(1), r * (3 * r + 1) / 2);
    }
    default: {
      const long long r = (N - 2) / 3;
      return LaurentPoly::monomial(frac(1), (r + 1) * (3 * r + 2) / 2);
    }
  }
}

long long bridge_constant(int family, long long p) {
  if (p < 1) throw std::invalid_argument("bridge_constant: p must be >= 1");
  switch (family) {
    case 1: case 7: return (6 * p + 5) * (6 * p + 5);
    case 2: case 10: return 1;
    case 3: case 8: return (6 * p - 5) * (6 * p - 5);
    case 4: return (6 * p + 1) * (6 * p + 1);
    case 5: return (12 * p - 5) * (12 * p - 5);
    case 6: return (6 * p - 1) * (6 * p - 1);
    case 9: return (12 * p - 1) * (12 * p - 1);
    default:
      throw std::invalid_argument("bridge_constant: family must be 1..10");
  }
}

LaurentPoly chi_shifted_sum(const ChiFunction& chi, long long c,
                            long long bound, int sign) {
  const long long four_P = 2 * chi.period();
  LaurentPoly out;
  for (long long n = 0; n <= bound; ++n) {
    const int v = chi.eval(n);
    if (v == 0) continue;
    const long long shifted = n * n - c;
    if (shifted % four_P != 0)
      throw std::domain_error(
          "chi_shifted_sum: (n^2 - c)/4P is not an integer at n = " +
          std::to_string(n));
    out += LaurentPoly::monomial(frac(sign * v), shifted / four_P);
  }
  return out;
}

LaurentPoly bridge_lhs(int family, long long p, long long N) {
  main_family_params(family, p);  // validates family and p
  if (N < 1) throw std::invalid_argument("bridge_lhs: N must be >= 1");
  const BaileyPair bp = bailey_pair(kPairForFamily[family]);
  switch (family) {
    case 6: case 7: case 3: case 4: case 8: case 1: {
      LaurentPoly sum;
      for (long long k = 0; k < N; ++k) {
        LaurentPoly a = bp.alpha(k).to_laurent();
        a.mul_monomial(frac(k % 2 == 0 ? 1 : -1),
                       binom2(k + 1) + (p - 1) * (k * k + k));
        sum += a;
      }
      if (family == 8 || family == 1) {
        sum *= LaurentPoly::one() - LaurentPoly::monomial(frac(1), 1);
        if (family == 1) sum.mul_monomial(frac(1), -1);
      }
      return sum;
    }
    case 5: case 9: {
      PochSeq shifted = [alpha = bp.alpha, p](long long k) {
        PochFraction a = alpha(k);
        a.mul_monomial(Rational(1), p * (k * k + 2 * k));
        return a;
      };
      PochSeq starred = star_sequence(shifted);
      PochFraction total;
      for (long long k = 0; k < N; ++k) {
        PochFraction t = starred(k);
        t.mul_monomial(frac(k % 2 == 0 ? 1 : -1), -binom2(k + 1));
        total += t;
      }
      return total.to_laurent();
    }
    case 2: {
      PochSeq hat = hat_sequence(bp.alpha);
      PochFraction total;
      for (long long k = 0; k < N; ++k) {
        PochFraction t = hat(k);
        t.mul_monomial(frac(k % 2 == 0 ? 1 : -1),
                       -binom2(k + 1) + p * (k + 1) * (k + 1));
        total += t;
      }
      total += PochFraction::one();
      PochFraction tail = hat(N - 1) - PochFraction(correction_gamma(N - 1));
      tail.mul_monomial(frac(N % 2 == 0 ? 1 : -1, 2),
                        -binom2(N) + p * N * N);
      total += tail;
      return total.to_laurent();
    }
    default: {  // family 10
      PochSeq hat = hat_sequence(bp.alpha);
      PochFraction total;
      for (long long k = 0; k + 1 < N; ++k) {
        PochFraction t = hat(k);
        t.mul_monomial(frac(k % 2 == 0 ? 1 : -1),
                       -binom2(k + 1) + p * (k + 1) * (k + 1));
        total += t;
      }
      PochFraction tail = hat(N - 1);
      tail.mul_monomial(frac(N % 2 == 0 ? -1 : 1, 2),
                        -binom2(N) + p * N * N);
      total += tail;
      total -= PochFraction::one();
      LaurentPoly kap = correction_kappa(N);
      kap.mul_monomial(frac(N % 2 == 0 ? -1 : 1, 2), p * N * N);
      total += PochFraction(kap);
      return total.to_laurent();
    }
  }
}

LaurentPoly bridge_rhs(int family, long long p, long long N) {
  MainFamilyParams mp = main_family_params(family, p);
  if (N < 1) throw std::invalid_argument("bridge_rhs: N must be >= 1");
  ChiFunction chi(2, 3, mp.p3, 1, 1, mp.l3);
  const int sign = (family == 1 || family == 8) ? 1 : -1;
  LaurentPoly out =
      chi_shifted_sum(chi, bridge_constant(family, p), 2 * mp.p3 * N, sign);
  if (mp.special_case) {
    LaurentPoly lam = correction_lambda(N);
    lam.mul_monomial(frac(-1), -1);
    out += lam;
  }
  return out;
}

VerificationRecord verify_poly_identity(int family, long long p, long long N) {
  return make_poly_record("poly-bridge", family, p, N, bridge_lhs(family, p, N),
                          bridge_rhs(family, p, N));
}

VerificationRecord verify_main(int family, long long p, long long M,
                               long long N) {
  MainFamilyParams mp = main_family_params(family, p);
  RootOfUnity z(M, N);
  const long long L = 24 * mp.p3 * N;
  Cyclotomic lhs = cyc_embed(multisum_eval(family, p, z), L);
  ChiFunction chi(2, 3, mp.p3, 1, 1, mp.l3);
  Cyclotomic rhs = root_power(M, N, mp.delta, L) * eichler_limit(chi, M, N);
  rhs.mul_scalar(frac(-1, 2));
  if (mp.special_case) rhs -= root_power(M, N, frac(-1), L);
  // The constant term of the family-10 closed form survives specialisation,
  // so the weighted-sum side carries it as an additive one.
  if (family == 10) rhs += Cyclotomic::one(L);
  return make_value_record("multisum-limit", family, p, M, N, lhs, rhs);
}

std::vector<VerificationRecord> verify_conjecture_suite(long long n_max) {
  if (n_max < 1)
    throw std::invalid_argument("verify_conjecture_suite: n_max must be >= 1");
  static constexpr std::pair<int, long long> kInstances[] = {
      {2, 2}, {3, 2}, {4, 1}, {4, 2}, {5, 1},
      {5, 2}, {5, 3}, {6, 1}, {7, 1}};
  std::vector<VerificationRecord> out;
  for (const auto& [family, p] : kInstances)
    for (long long N = 1; N <= n_max; ++N) {
      VerificationRecord rec = verify_main(family, p, 1, N);
      rec.identity = "conjecture";
      out.push_back(std::move(rec));
    }
  return out;
}

}  // namespace qru

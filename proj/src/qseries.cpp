#include "qru/qseries.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qru {

namespace {

// Outer-term and chain-weight shape of one family.  The outer term is
// q^{quad*t^2 + lin*t} (q^{t+start_off}; q)_{t+len_off}; chain weights are
// q^{n^2} or q^{n^2+n}.
struct FamilyShape {
  long long quad, lin;
  int start_off;  // 0 or 1
  int len_off;    // 0 or 1
  bool chain_square;
};

const FamilyShape& family_shape(int family) {
  static const FamilyShape table[10] = {
      {0, 1, 1, 1, false},    // 1
      {0, 1, 0, 0, true},     // 2
      {0, 2, 1, 0, false},    // 3
      {0, 1, 1, 0, false},    // 4
      {0, 1, 1, 0, true},     // 5
      {-1, 0, 1, 0, false},   // 6
      {-1, -1, 1, 0, false},  // 7
      {-1, -2, 1, 1, false},  // 8
      {-1, -1, 1, 0, true},   // 9
      {-1, 0, 0, 0, true},    // 10
  };
  if (family < 1 || family > 10)
    throw std::invalid_argument("multisum_eval: family index must be in 1..10");
  return table[family - 1];
}

struct BinomCache {
  std::mutex mu;
  std::map<std::pair<long long, long long>, LaurentPoly> table;
};

BinomCache& binom_cache() {
  static BinomCache cache;
  return cache;
}

}  // namespace

RootOfUnity::RootOfUnity(long long m, long long n) : M(m), N(n) {
  if (n < 1) throw std::invalid_argument("RootOfUnity: N must be positive");
  long long r = m % n;
  if (r < 0) r += n;
  if (std::gcd(r, n) != 1) throw std::invalid_argument("RootOfUnity: M and N must be coprime");
}

LaurentPoly q_pochhammer(long long s, long long n) { return pochhammer_poly(s, n); }

LaurentPoly q_binomial(long long n, long long k) {
  if (k < 0 || k > n) return LaurentPoly::zero();
  if (k == 0 || k == n) return LaurentPoly::one();
  if (n - k < k) k = n - k;
  BinomCache& cache = binom_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  // fill the Pascal triangle rows up to n under the lock
  for (long long row = 2; row <= n; ++row) {
    for (long long col = 1; col <= std::min(k, row - 1); ++col) {
      auto key = std::make_pair(row, col);
      if (cache.table.count(key)) continue;
      auto fetch = [&](long long r2, long long c2) -> LaurentPoly {
        if (c2 < 0 || c2 > r2) return LaurentPoly::zero();
        if (c2 == 0 || c2 == r2) return LaurentPoly::one();
        if (r2 - c2 < c2) c2 = r2 - c2;
        return cache.table.at(std::make_pair(r2, c2));
      };
      LaurentPoly val = fetch(row - 1, col - 1);
      val += LaurentPoly::monomial(Rational(1), col) * fetch(row - 1, col);
      cache.table.emplace(key, std::move(val));
    }
  }
  return cache.table.at(std::make_pair(n, k));
}

Cyclotomic q_pochhammer_at_root(long long start, long long count, const RootOfUnity& z) {
  if (count < 0) throw std::domain_error("q_pochhammer_at_root: negative length");
  Cyclotomic acc = Cyclotomic::one(z.N);
  for (long long i = 0; i < count; ++i) {
    Cyclotomic term = Cyclotomic::one(z.N);
    term.add_term(Rational(-1), z.M * (start + i));
    acc = acc * term;
    // A factor with exponent divisible by N zeroes the residue outright.
    if (acc.support_size() == 0) break;
  }
  return acc;
}

Cyclotomic multisum_eval(int family, long long p, const RootOfUnity& z) {
  return multisum_eval_bounded(family, p, z, z.N);
}

Cyclotomic multisum_eval_bounded(int family, long long p, const RootOfUnity& z,
                                 long long bound) {
  const FamilyShape& shape = family_shape(family);
  if (p < 1) throw std::invalid_argument("multisum_eval: p must be positive");
  if (bound < 0) throw std::invalid_argument("multisum_eval: negative bound");
  const long long N = z.N, M = z.M;

  auto weight_exp = [&](long long n) { return shape.chain_square ? n * n : n * (n + 1); };
  std::map<std::pair<long long, long long>, Cyclotomic> binom_at_root;
  auto binom_value = [&](long long n, long long k) -> const Cyclotomic& {
    auto key = std::make_pair(n, k);
    auto it = binom_at_root.find(key);
    if (it == binom_at_root.end())
      it = binom_at_root.emplace(key, eval_laurent_at_root(q_binomial(n, k), M, N, N)).first;
    return it->second;
  };

  // chain[m] = sum over admissible inner chains below outer index m of the
  // product of weights and binomials; level 0 is the empty product.
  std::vector<Cyclotomic> chain(static_cast<size_t>(bound), Cyclotomic::one(N));
  for (long long level = 1; level < p; ++level) {
    std::vector<Cyclotomic> next(static_cast<size_t>(bound), Cyclotomic::zero(N));
    for (long long m = 0; m < bound; ++m)
      for (long long n = 0; n <= m; ++n) {
        Cyclotomic term = binom_value(m, n) * chain[n];
        term.mul_root(M * (weight_exp(n) % N));
        next[m] += term;
      }
    chain = std::move(next);
  }

  Cyclotomic total = Cyclotomic::zero(N);
  for (long long t = 0; t < bound; ++t) {
    Cyclotomic outer = q_pochhammer_at_root(t + shape.start_off, t + shape.len_off, z);
    if (outer.support_size() == 0) continue;
    long long e = (shape.quad * (t % N) % N * (t % N) + shape.lin * (t % N)) % N;
    outer.mul_root(M * e);
    total += outer * chain[t];
  }
  return total;
}

Cyclotomic habiro_poincare_eval(const RootOfUnity& z) {
  const long long N = z.N, M = z.M;
  Cyclotomic total = Cyclotomic::zero(N);
  for (long long n = 0; n < N; ++n) {
    Cyclotomic term = q_pochhammer_at_root(n + 1, n + 1, z);
    term.mul_root(M * n);
    total += term;
  }
  return total;
}

Cyclotomic wrt_invariant(int sign, long long p, const RootOfUnity& z) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("wrt_invariant: sign must be +1 or -1");
  if (z.N == 1)
    throw std::domain_error("wrt_invariant: the divisor 1 - q vanishes at N = 1");
  if (sign == -1 && p < 2)
    throw std::invalid_argument("wrt_invariant: the sign -1 surgery needs p >= 2");
  int family = sign == -1 ? 1 : 8;
  Cyclotomic h = multisum_eval(family, p, z);
  Cyclotomic divisor = Cyclotomic::one(z.N) - Cyclotomic::root(z.N, z.M);
  return h * divisor.inverse();
}

}  // namespace qru

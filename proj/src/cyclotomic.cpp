#include "qru/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qru {

namespace {

long long smallest_prime_factor(long long n) {
  if (n % 2 == 0) return 2;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return d;
  return n;
}

// a^{-1} mod m for m >= 1, gcd(a, m) = 1.
long long mod_inverse(long long a, long long m) {
  if (m == 1) return 0;
  long long r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw std::logic_error("mod_inverse: arguments are not coprime");
  return ((s0 % m) + m) % m;
}

std::vector<long long> divisors_ascending(long long n) {
  std::vector<long long> ds;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    ds.push_back(d);
    if (d != n / d) ds.push_back(n / d);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Dense integer polynomials for the minimal-polynomial computation; index =
// exponent, trailing zeros trimmed, value[deg] != 0.
using ZVec = std::vector<Integer>;

// Exact division of a by a monic divisor; throws std::logic_error when a
// remainder survives (computing minimal polynomials must divide exactly).
ZVec divide_by_monic(ZVec a, const ZVec& d) {
  const long long dd = static_cast<long long>(d.size()) - 1;
  const long long ad = static_cast<long long>(a.size()) - 1;
  if (ad < dd) throw std::logic_error("divide_by_monic: degree underflow");
  ZVec quot(ad - dd + 1);
  for (long long e = ad; e >= dd; --e) {
    if (a[e] == 0) continue;
    Integer c;
    mpz_swap(c.get_mpz_t(), a[e].get_mpz_t());
    quot[e - dd] = c;
    for (long long t = 0; t < dd; ++t)
      if (d[t] != 0) a[e - dd + t] -= c * d[t];
  }
  for (long long t = 0; t < dd; ++t)
    if (a[t] != 0) throw std::logic_error("divide_by_monic: division not exact");
  return quot;
}

struct PhiCache {
  std::mutex mu;
  std::map<long long, ZVec> table;
  size_t bytes = 0;
  size_t cap_bytes = 0;
  bool cap_read = false;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

size_t approx_bytes(const ZVec& v) { return 32 + v.size() * (sizeof(Integer) + 16); }

// Minimal polynomial of a primitive n-th root of unity as a dense integer
// vector.  Caller must hold the cache lock.
const ZVec& phi_dense_locked(long long n) {
  PhiCache& cache = phi_cache();
  if (!cache.cap_read) {
    cache.cap_read = true;
    long long mb = 64;
    if (const char* env = std::getenv("QRU_PHI_CACHE_MB")) {
      char* end = nullptr;
      long long parsed = std::strtoll(env, &end, 10);
      if (end != env && parsed >= 0) mb = parsed;
    }
    cache.cap_bytes = static_cast<size_t>(mb) * 1024 * 1024;
  }
  auto hit = cache.table.find(n);
  if (hit != cache.table.end()) return hit->second;

  // x^n - 1 divided by every proper-divisor minimal polynomial, ascending,
  // so each needed factor is already in the table when its turn comes.
  for (long long d : divisors_ascending(n)) {
    if (cache.table.count(d)) continue;
    ZVec acc(d + 1);
    acc[0] = -1;
    acc[d] = 1;
    for (long long e : divisors_ascending(d))
      if (e != d) acc = divide_by_monic(std::move(acc), cache.table.at(e));
    cache.bytes += approx_bytes(acc);
    cache.table.emplace(d, std::move(acc));
  }
  // Shed the largest entries first once over budget, but never the one being
  // returned; small divisors are the ones every later computation reuses.
  while (cache.bytes > cache.cap_bytes && cache.table.size() > 1) {
    auto last = std::prev(cache.table.end());
    if (last->first == n) last = std::prev(last);
    if (last->first == n) break;
    cache.bytes -= approx_bytes(last->second);
    cache.table.erase(last);
  }
  return cache.table.at(n);
}

std::vector<std::pair<long long, Rational>> nonzero_terms(const std::vector<Rational>& coords) {
  std::vector<std::pair<long long, Rational>> out;
  for (size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0) out.emplace_back(static_cast<long long>(j), coords[j]);
  return out;
}

// Zero test for a residue written on the order-L basis z^e, via recursive
// splitting over a prime p | L.  When p^2 | L the classes e mod p are
// independent over the order-(L/p) field; when p || L the Chinese-remainder
// coordinates leave a single linear relation (the vanishing sum over all
// p-th roots), so the p class sums must all coincide.
bool residue_is_zero(const std::vector<std::pair<long long, Rational>>& terms, long long L) {
  if (terms.empty()) return true;
  if (L == 1) {
    Rational s = 0;
    for (const auto& [e, c] : terms) s += c;
    return s == 0;
  }
  const long long p = smallest_prime_factor(L);
  const long long K = L / p;
  if (K % p == 0) {
    std::vector<std::vector<std::pair<long long, Rational>>> bucket(p);
    for (const auto& [e, c] : terms) bucket[e % p].emplace_back(e / p, c);
    for (const auto& b : bucket)
      if (!residue_is_zero(b, K)) return false;
    return true;
  }
  const long long inv_k = mod_inverse(K, p);
  const long long inv_p = mod_inverse(p, K);
  std::vector<std::map<long long, Rational>> part(p);
  for (const auto& [e, c] : terms) {
    const long long a = (e % p) * inv_k % p;
    const long long b = (e % K) * inv_p % K;
    part[a][b] += c;  // CRT coordinates are unique, no cancellation here
  }
  for (long long a = 0; a + 1 < p; ++a) {
    std::map<long long, Rational> diff = part[a];
    for (const auto& [b, c] : part[p - 1]) {
      auto [it, fresh] = diff.emplace(b, -c);
      if (!fresh) it->second -= c;
    }
    std::vector<std::pair<long long, Rational>> flat;
    for (const auto& [b, c] : diff)
      if (c != 0) flat.emplace_back(b, c);
    if (!residue_is_zero(flat, K)) return false;
  }
  return true;
}

}  // namespace

long long euler_phi(long long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: argument must be positive");
  long long result = n;
  long long m = n;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    result -= result / d;
    while (m % d == 0) m /= d;
  }
  if (m > 1) result -= result / m;
  return result;
}

LaurentPoly cyclotomic_polynomial(long long L) {
  if (L < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  PhiCache& cache = phi_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  const ZVec& dense = phi_dense_locked(L);
  LaurentPoly out;
  for (size_t e = 0; e < dense.size(); ++e)
    if (dense[e] != 0) out += LaurentPoly::monomial(Rational(dense[e]), static_cast<long long>(e));
  return out;
}

Cyclotomic Cyclotomic::zero(long long order) {
  if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
  return Cyclotomic(order, std::vector<Rational>(order, Rational(0)));
}

Cyclotomic Cyclotomic::one(long long order) { return from_rational(Rational(1), order); }

Cyclotomic Cyclotomic::from_rational(const Rational& value, long long order) {
  Cyclotomic x = zero(order);
  x.coords_[0] = value;
  return x;
}

Cyclotomic Cyclotomic::monomial(const Rational& c, long long e, long long order) {
  Cyclotomic x = zero(order);
  long long r = e % order;
  if (r < 0) r += order;
  x.coords_[static_cast<size_t>(r)] = c;
  return x;
}

long long Cyclotomic::support_size() const {
  long long n = 0;
  for (const auto& c : coords_)
    if (c != 0) ++n;
  return n;
}

void Cyclotomic::check_same_order(const Cyclotomic& o) const {
  if (order_ != o.order_)
    throw std::invalid_argument("Cyclotomic: mixed orders " + std::to_string(order_) + " and " +
                                std::to_string(o.order_));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_same_order(o);
  for (long long j = 0; j < order_; ++j)
    if (o.coords_[j] != 0) coords_[j] += o.coords_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_same_order(o);
  for (long long j = 0; j < order_; ++j)
    if (o.coords_[j] != 0) coords_[j] -= o.coords_[j];
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coords_)
    if (c != 0) c = -c;
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same_order(b);
  const long long L = a.order_;
  auto ta = nonzero_terms(a.coords_);
  auto tb = nonzero_terms(b.coords_);
  if (ta.size() > tb.size()) std::swap(ta, tb);
  Cyclotomic r = Cyclotomic::zero(L);
  for (const auto& [ea, ca] : ta)
    for (const auto& [eb, cb] : tb) {
      long long e = ea + eb;
      if (e >= L) e -= L;
      r.coords_[e] += ca * cb;
    }
  return r;
}

Cyclotomic& Cyclotomic::mul_scalar(const Rational& c) {
  if (c == 0) {
    std::fill(coords_.begin(), coords_.end(), Rational(0));
    return *this;
  }
  for (auto& x : coords_)
    if (x != 0) x *= c;
  return *this;
}

Cyclotomic& Cyclotomic::mul_root(long long e) {
  long long r = e % order_;
  if (r < 0) r += order_;
  if (r == 0) return *this;
  std::rotate(coords_.rbegin(), coords_.rbegin() + r, coords_.rend());
  return *this;
}

Cyclotomic& Cyclotomic::add_term(const Rational& c, long long e) {
  long long r = e % order_;
  if (r < 0) r += order_;
  coords_[static_cast<size_t>(r)] += c;
  return *this;
}

bool Cyclotomic::is_zero() const { return residue_is_zero(nonzero_terms(coords_), order_); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same_order(b);
  return (a - b).is_zero();
}

std::vector<Rational> Cyclotomic::canonical_coords() const {
  const long long L = order_;
  const long long deg = euler_phi(L);
  Integer den_lcm = 1;
  for (const auto& c : coords_)
    if (c != 0) den_lcm = lcm(den_lcm, Integer(c.get_den()));
  std::vector<Integer> w(L);
  for (long long j = 0; j < L; ++j)
    if (coords_[j] != 0) w[j] = coords_[j].get_num() * (den_lcm / coords_[j].get_den());

  const LaurentPoly phi = cyclotomic_polynomial(L);
  std::vector<Integer> phi_low(deg);
  for (const auto& [e, c] : phi.terms())
    if (e < deg) phi_low[e] = c.get_num();

  for (long long e = L - 1; e >= deg; --e) {
    if (w[e] == 0) continue;
    Integer c;
    mpz_swap(c.get_mpz_t(), w[e].get_mpz_t());
    for (long long t = 0; t < deg; ++t)
      if (phi_low[t] != 0) w[e - deg + t] -= c * phi_low[t];
  }
  std::vector<Rational> out(deg);
  for (long long t = 0; t < deg; ++t)
    if (w[t] != 0) out[t] = make_rational(w[t], den_lcm);
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  const long long L = order_;
  const long long deg = euler_phi(L);
  std::vector<Rational> canon = canonical_coords();
  LaurentPoly a;
  for (long long t = 0; t < deg; ++t)
    if (canon[t] != 0) a += LaurentPoly::monomial(canon[t], t);
  if (a.is_zero()) throw std::domain_error("Cyclotomic::inverse: zero has no inverse");

  // Extended Euclid on (minimal polynomial, a); the modulus is irreducible,
  // so the loop ends at a nonzero constant.
  LaurentPoly r0 = cyclotomic_polynomial(L), r1 = a;
  LaurentPoly s0, s1 = LaurentPoly::one();
  while (!r1.is_zero()) {
    auto [q, rem] = r0.divmod(r1);
    r0 = r1;
    r1 = rem;
    LaurentPoly s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  // Remainders here are Laurent (divmod shifts by the divisor's lowest
  // exponent), so coprimality ends the loop at a unit c*q^e, not a bare
  // constant; fold the q^e back in as a root factor.
  if (r0.is_zero() || r0.terms().size() != 1)
    throw std::logic_error("Cyclotomic::inverse: modulus was not irreducible");
  const long long unit_exp = r0.min_exp();
  s0.mul_scalar(Rational(1) / r0.coeff(unit_exp));
  LaurentPoly reduced = s0.divmod(cyclotomic_polynomial(L)).second;
  Cyclotomic out = zero(L);
  for (const auto& [e, c] : reduced.terms()) out.add_term(c, e);
  out.mul_root(-unit_exp);
  return out;
}

Cyclotomic Cyclotomic::power(long long e) const {
  if (e == 0) return one(order_);
  if (e < 0) return inverse().power(-e);
  auto nz = nonzero_terms(coords_);
  if (nz.empty()) return zero(order_);
  if (nz.size() == 1) {
    const auto& [exp, c] = nz.front();
    Rational ce;
    mpz_pow_ui(ce.get_num_mpz_t(), Rational(c).get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(ce.get_den_mpz_t(), Rational(c).get_den_mpz_t(), static_cast<unsigned long>(e));
    ce.canonicalize();
    __int128 shifted = static_cast<__int128>(exp % order_) * (e % order_) % order_;
    return monomial(ce, static_cast<long long>(shifted), order_);
  }
  Cyclotomic base = *this, acc = one(order_);
  long long k = e;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

Cyclotomic Cyclotomic::apply_automorphism(long long t) const {
  long long r = t % order_;
  if (r < 0) r += order_;
  if (std::gcd(r, order_) != 1)
    throw std::invalid_argument("apply_automorphism: exponent must be a unit modulo the order");
  Cyclotomic out = zero(order_);
  for (long long j = 0; j < order_; ++j)
    if (coords_[j] != 0) out.coords_[j * r % order_] = coords_[j];
  return out;
}

std::string Cyclotomic::str() const { return str("z" + std::to_string(order_)); }

std::string Cyclotomic::str(const std::string& var) const {
  std::vector<Rational> canon = canonical_coords();
  LaurentPoly p;
  for (size_t t = 0; t < canon.size(); ++t)
    if (canon[t] != 0) p += LaurentPoly::monomial(canon[t], static_cast<long long>(t));
  return p.str(var);
}

std::complex<double> Cyclotomic::to_complex() const {
  const double tau = 2.0 * 3.14159265358979323846264338327950288;
  std::complex<double> acc(0.0, 0.0);
  for (long long j = 0; j < order_; ++j) {
    if (coords_[j] == 0) continue;
    double angle = tau * static_cast<double>(j) / static_cast<double>(order_);
    acc += coords_[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

Cyclotomic cyc_embed(const Cyclotomic& x, long long big_order) {
  if (big_order < 1 || big_order % x.order() != 0)
    throw std::invalid_argument("cyc_embed: target order must be a multiple of the source order");
  const long long factor = big_order / x.order();
  Cyclotomic out = Cyclotomic::zero(big_order);
  for (long long j = 0; j < x.order(); ++j)
    if (x.coords()[j] != 0) out.add_term(x.coords()[j], j * factor);
  return out;
}

Cyclotomic root_power(long long M, long long N, const Rational& r, long long L) {
  if (N < 1 || L < 1) throw std::invalid_argument("root_power: orders must be positive");
  long long mr = M % N;
  if (mr < 0) mr += N;
  if (std::gcd(mr, N) != 1) throw std::invalid_argument("root_power: M and N must be coprime");
  const Integer& a = r.get_num();
  const Integer& b = r.get_den();
  Integer bN = b * static_cast<long>(N);
  Integer Lz(static_cast<long>(L));
  if (!mpz_divisible_p(Lz.get_mpz_t(), bN.get_mpz_t()))
    throw std::invalid_argument("root_power: order " + std::to_string(L) +
                                " cannot represent the exponent denominator");
  Integer e = Integer(static_cast<long>(M)) * a * (Lz / bN);
  Integer em;
  mpz_fdiv_r(em.get_mpz_t(), e.get_mpz_t(), Lz.get_mpz_t());
  return Cyclotomic::root(L, em.get_si());
}

Cyclotomic eval_laurent_at_root(const LaurentPoly& f, long long M, long long N, long long L) {
  if (N < 1 || L < 1 || L % N != 0)
    throw std::invalid_argument("eval_laurent_at_root: order L must be a multiple of N");
  long long mr = M % N;
  if (mr < 0) mr += N;
  if (std::gcd(mr, N) != 1)
    throw std::invalid_argument("eval_laurent_at_root: M and N must be coprime");
  const long long factor = L / N;
  const Integer Lz(static_cast<long>(L));
  Cyclotomic out = Cyclotomic::zero(L);
  for (const auto& [e, c] : f.terms()) {
    Integer exp = Integer(static_cast<long>(M)) * static_cast<long>(e) * static_cast<long>(factor);
    Integer em;
    mpz_fdiv_r(em.get_mpz_t(), exp.get_mpz_t(), Lz.get_mpz_t());
    out.add_term(c, em.get_si());
  }
  return out;
}

}  // namespace qru

#pragma once

#include <functional>

#include "qru/cyclotomic.hpp"
#include "qru/poch_fraction.hpp"
#include "qru/qseries.hpp"

namespace qru {

// A sequence of exact q-fractions indexed by k >= 0.
using PochSeq = std::function<PochFraction(long long)>;

// A pair of sequences (alpha, beta) satisfying
//   beta_n = sum_{k=0}^n alpha_k / ((q)_{n-k} (q^{rel+1}; q)_{n+k}),
// i.e. a Bailey pair relative to a = q^rel with rel in {1, 2}.
struct BaileyPair {
  int id;  // 1..10 for the built-in pairs, 0 for derived ones
  int rel;
  PochSeq alpha;
  PochSeq beta;
};

// The ten built-in pairs, indexed 1..10; ids 1..6 are relative to q and
// ids 7..10 relative to q^2.  Throws std::invalid_argument outside 1..10.
BaileyPair bailey_pair(int which);

// beta_n computed from alpha by the defining double-factorial sum.
PochFraction pair_beta_from_alpha(const BaileyPair& bp, long long n);

// beta_n computed from alpha by the inverted single-sum form
//   1/((q)_n (aq)_n) sum_k (q^{-n})_k / (aq^{n+1})_k (-1)^k q^{nk-k(k-1)/2} alpha_k.
PochFraction pair_beta_alternate(const BaileyPair& bp, long long n);

// Checks beta_n against both reconstructions for all 0 <= n <= n_max.
bool verify_pair(const BaileyPair& bp, long long n_max);

// (alpha_n, beta_n) -> (a^n q^{n^2} alpha_n, sum_j a^j q^{j^2} beta_j/(q)_{n-j}),
// a Bailey pair relative to the same a.
BaileyPair bailey_lemma(const BaileyPair& bp);

// The sequence map s_n -> (1-q^2)(s_n/(1-q^{2n+2}) - q^{2n} s_{n-1}/(1-q^{2n}))
// with s_{-1} = 0.
PochSeq star_sequence(const PochSeq& s);

// A pair relative to q^2 becomes (alpha^*, beta) relative to q.
BaileyPair bailey_lattice(const BaileyPair& bp);

// The sequence map s_k -> (1-q)/(1-q^{k+1}) s_k.
PochSeq hat_sequence(const PochSeq& s);

// The transform sending a pair relative to a to one relative to aq:
//   alpha_k -> (1-aq^{2k+1}) (aq/b)_k (-b)^k q^{k(k-1)/2} / ((1-aq) (bq)_k)
//              * sum_{j=0}^k (b)_j/(aq/b)_j (-b)^{-j} q^{-j(j-1)/2} alpha_j,
//   beta_k  -> (b)_k/(bq)_k beta_k.
// Only the case used here is supported: a = q (rel 1) with b = -q; anything
// else throws std::invalid_argument.
BaileyPair dagger_transform(const BaileyPair& bp, const LaurentPoly& b);

// (alpha_k, beta_k) -> (q^{k^2+2k} alpha_k(1/q), q^{-k^2-3k} beta_k(1/q)),
// a pair relative to q^2 when the input is; requires rel = 2.
BaileyPair dual_pair(const BaileyPair& bp);

// The chained-sum identities: for a pair relative to q (delta = 0) or to
// q^2 (delta = 1), the p-fold chained sum
//   sum_{n-1 >= n_p >= ... >= n_1 >= 0} q^{(n-n_p-1)(n-n_p+delta)}
//     beta_{n-n_p-1}/(q)_{n_p} prod_i q^{(n-n_i-1)(n-n_i+delta)} [n_{i+1}, n_i]
// equals a single sum over the alpha sequence whose shape depends on the
// variant below.  All sides are exact fractions in a generic q.
enum class ChainVariant { rel_q, rel_q2_star, rel_q2_plain };

PochFraction chained_sum_lhs(const BaileyPair& bp, long long p, long long n);
PochFraction chained_sum_rhs(const BaileyPair& bp, long long p, long long n,
                             ChainVariant variant);
bool verify_chained_sum(const BaileyPair& bp, long long p, long long n,
                        ChainVariant variant);

// Each built-in pair evaluates one nested family as a single finite sum at
// any primitive root of unity; this returns the family index it computes.
int closed_form_family(int pair_id);

// The single-sum value at z, arranged to equal the nested sum exactly
// (constant shifts are folded in).
Cyclotomic closed_form_eval(int pair_id, long long p, const RootOfUnity& z);

// closed_form_eval(pair_id) == multisum_eval(closed_form_family(pair_id)).
bool verify_closed_form(int pair_id, long long p, const RootOfUnity& z);

}  // namespace qru

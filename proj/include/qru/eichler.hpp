#pragma once

#include <array>
#include <map>
#include <vector>

#include "qru/cyclotomic.hpp"
#include "qru/record.hpp"

namespace qru {

// A triple of signs, one per modulus component.
using SignVector = std::array<int, 3>;

// The eight sign vectors in a fixed enumeration order (+ before -, first
// component outermost).
const std::vector<SignVector>& all_sign_vectors();

// An odd periodic function supported on eight residue classes mod 2P,
// where P = p1*p2*p3 for pairwise coprime moduli.  Each sign vector eps
// selects the residue m(eps) = P * (1 + sum_j eps_j*l_j/p_j) mod 2P, and
// the value there is -eps_1*eps_2*eps_3.  The m(-eps) = -m(eps) pairing
// makes the function odd, and the lookup table extends it 2P-periodically
// to all integers.
class ChiFunction {
 public:
  // Throws std::invalid_argument unless the p_j are positive and pairwise
  // coprime and 0 < l_j < p_j, or when two sign vectors collide on the same
  // residue class (the function would be ill-defined).
  ChiFunction(long long p1, long long p2, long long p3, long long l1,
              long long l2, long long l3);

  // A synthetic function from an explicit residue table (values +-1 on
  // residues in [0, 2P)).  Used to exercise failure paths and mutation
  // tests; carries no sign-vector table and no modulus decomposition.
  static ChiFunction from_table(long long P, std::map<long long, int> table);

  long long P() const { return P_; }
  long long period() const { return 2 * P_; }
  // Component moduli / shifts; zero for synthetic tables.
  long long p(int j) const { return p_[j]; }
  long long l(int j) const { return l_[j]; }
  bool has_sign_table() const { return has_sign_table_; }

  // The residue m(eps) in [0, 2P).  Throws std::domain_error on a synthetic
  // table (no sign vectors exist).
  long long m_of(const SignVector& eps) const;

  // chi(n) for any integer, via the 2P-periodic lookup.
  int eval(long long n) const;

  // residue -> sign over one period [0, 2P)
  const std::map<long long, int>& support() const { return table_; }

  // The common value of m(eps)^2 mod 2P (constant across eps; checked at
  // construction).
  long long square_class_mod_two_P() const { return msq_two_P_; }
  // m(eps)^2 mod 4P is constant for the instances used by the main
  // verification families; the flag records whether it held here.
  bool square_class_constant_mod_four_P() const { return msq_four_P_constant_; }
  long long square_class_mod_four_P() const;

  // Hypothesis helpers for the weighted-sum halving lemma.
  bool support_all_odd() const;
  // chi(P - n) == chi(n) for all n
  bool even_mod_P() const;
  // chi(n + P) == -chi(n) for all n
  bool negates_under_half_period() const;

 private:
  ChiFunction() = default;

  long long P_ = 1;
  long long p_[3] = {0, 0, 0};
  long long l_[3] = {0, 0, 0};
  bool has_sign_table_ = false;
  std::map<SignVector, long long> m_;
  std::map<long long, int> table_;
  long long msq_two_P_ = 0;
  bool msq_four_P_constant_ = false;
  long long msq_four_P_ = 0;
};

// One incomplete quadratic Gauss sum: the terms q^{n^2/(4P)} with
// n = 2Pk + m(eps) running over a window determined by the third modulus,
// evaluated at q = e^{2 pi i M/N} inside the order-L field.
struct GaussSumSpec {
  ChiFunction chi;
  SignVector epsilon;
  long long M;
  long long N;
  long long L;

  // L = 0 selects the default order 4PN; otherwise 4PN must divide L.
  // Requires gcd(M, N) = 1 and a chi built from moduli (not a synthetic
  // table, whose window length would be undefined).
  GaussSumSpec(ChiFunction chi_in, const SignVector& eps, long long M_in,
               long long N_in, long long L_in = 0);
};

// The low window: n = m(eps), m(eps) + 2P, ... with 0 <= n <= 2*p3*N.
Cyclotomic gauss_T(const GaussSumSpec& spec);
// The high window: 2*p3*N < n <= 4*p3*N.
Cyclotomic gauss_S(const GaussSumSpec& spec);

// Checks the four root-of-unity relations between the low- and high-window
// sums for chi = (2,3,p3),(1,1,l3): every pair of sign vectors meeting a
// case's parity conditions must satisfy both the stated residue congruence
// and the phased equality of sums.  Aggregate record (empty lhs/rhs).
VerificationRecord verify_gauss_relations(long long p3, long long l3,
                                          long long M, long long N);

// Checks the per-block consequences of the four relations, keyed on
// N mod 6: chains of phased equalities between specific T/S values.  The
// N = 3 mod 6 block is checked through the primitive four-case relations.
VerificationRecord verify_gauss_relation_blocks(long long p3, long long l3,
                                                long long M, long long N);

// Checks sum_{n=0}^{6 p3 N} chi(n) q^{n^2/(24 p3)} =
// 4 * sum_{n=0}^{2 p3 N} chi(n) q^{n^2/(24 p3)} as order-24p3N values.
VerificationRecord verify_gauss_quadruple(long long p3, long long l3,
                                          long long M, long long N);

// The limiting value sum_{n=0}^{PN} chi(n) (1 - n/(PN)) zeta_N^{M n^2/(4P)}
// as an element of the order-4PN field.
Cyclotomic eichler_limit(const ChiFunction& chi, long long M, long long N);

// Checks 2 * (weighted sum) = (unweighted sum over the same window) at a
// primitive N-th root.  Requires P = 2 mod 4, odd support, and evenness
// mod P; a violated hypothesis throws std::domain_error naming it.
VerificationRecord verify_weighted_sum_halving(const ChiFunction& chi,
                                               long long M, long long N);

// The first `terms` nonzero terms of the q-expansion attached to chi, one
// per line as "<n^2/4P> <+1|-1> n=<n>" with exact rational exponents in
// ascending order.  Returns the empty string when chi has empty support.
std::string emit_series(const ChiFunction& chi, long long terms);

}  // namespace qru

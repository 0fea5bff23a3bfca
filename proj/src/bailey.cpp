#include "qru/bailey.hpp"

#include <stdexcept>
#include <vector>

namespace qru {

namespace {

// Index decomposition used by all the built-in alpha sequences: every k >= 0
// is exactly one of 3r-1, 3r, 3r+1 with r >= 0.
struct Branch {
  int kind;  // 0: k = 3r-1, 1: k = 3r, 2: k = 3r+1
  long long r;
};

Branch branch_of(long long k) {
  switch (k % 3) {
    case 1:
      return {2, (k - 1) / 3};
    case 2:
      return {0, (k + 2) / 3};
    default:
      return {1, k / 3};
  }
}

// sum_{i=0}^{count-1} q^{step*i}; the expanded form of the geometric
// quotients (1 - q^{step*count}) / (1 - q^{step}).
LaurentPoly geometric(long long count, long long step) {
  LaurentPoly out;
  for (long long i = 0; i < count; ++i)
    out += LaurentPoly::monomial(Rational(1), step * i);
  return out;
}

PochFraction monomial_pf(long c, long long e) {
  return PochFraction::monomial(Rational(c), e);
}

PochSeq alpha_sequence(int which) {
  switch (which) {
    case 1:
      return [](long long k) {
        Branch b = branch_of(k);
        long long r = b.r;
        if (b.kind == 0) return monomial_pf(1, 6 * r * r - r);
        if (b.kind == 1) return monomial_pf(1, 6 * r * r + r);
        return monomial_pf(-1, 6 * r * r + 5 * r + 1) +
               monomial_pf(-1, 6 * r * r + 7 * r + 2);
      };
    case 2:
      return [](long long k) {
        Branch b = branch_of(k);
        long long r = b.r;
        if (b.kind == 0) return monomial_pf(1, 6 * r * r - 4 * r);
        if (b.kind == 1) return monomial_pf(1, 6 * r * r + 4 * r);
        return monomial_pf(-1, 6 * r * r + 8 * r + 2) +
               monomial_pf(-1, 6 * r * r + 4 * r);
      };
    case 3:
      return [](long long k) {
        Branch b = branch_of(k);
        long long r = b.r;
        if (b.kind == 0) return monomial_pf(1, 3 * r * r + r);
        if (b.kind == 1) return monomial_pf(1, 3 * r * r - r);
        return monomial_pf(-1, 3 * r * r + r) +
               monomial_pf(-1, 3 * r * r + 5 * r + 2);
      };
    case 4:
      return [](long long k) {
        Branch b = branch_of(k);
        long long r = b.r;
        if (b.kind == 0) return monomial_pf(1, 3 * r * r - 2 * r);
        if (b.kind == 1) return monomial_pf(1, 3 * r * r + 2 * r);
        return monomial_pf(-1, 3 * r * r + 4 * r + 1) +
               monomial_pf(-1, 3 * r * r + 2 * r);
      };
    case 5:
    case 6:
      return [which](long long k) {
        if (k % 3 == 1) return PochFraction::zero();
        long long e = which == 5 ? k * (2 * k - 1) / 3 : k * (k - 2) / 3;
        long sign = ((4 * k + 1) / 3) % 2 == 0 ? 1 : -1;
        PochFraction out(geometric(2 * k + 1, 1));
        out.mul_monomial(Rational(sign), e);
        return out;
      };
    case 7:
      return [](long long k) {
        Branch b = branch_of(k);
        long long r = b.r;
        if (b.kind == 0) return PochFraction::zero();
        if (b.kind == 1) {
          PochFraction out(geometric(3 * r + 1, 2));
          out.mul_monomial(Rational(1), 3 * r * r - r);
          return out;
        }
        PochFraction out(geometric(3 * r + 2, 2));
        out.mul_monomial(Rational(-1), 3 * r * r + r);
        return out;
      };
    case 8:
      return [](long long k) {
        Branch b = branch_of(k);
        long long r = b.r;
        if (b.kind == 0) return PochFraction::zero();
        if (b.kind == 1) {
          PochFraction out(geometric(3 * r + 1, 2));
          out.mul_monomial(Rational(1), 6 * r * r + r);
          return out;
        }
        PochFraction out(geometric(3 * r + 2, 2));
        out.mul_monomial(Rational(-1), 6 * r * r + 5 * r + 1);
        return out;
      };
    case 9:
      return [](long long k) {
        Branch b = branch_of(k);
        long long r = b.r;
        PochFraction out(geometric(k + 1, 1));
        if (b.kind == 0) {
          LaurentPoly d = LaurentPoly::monomial(Rational(1), 3 * r * r - 2 * r);
          d -= LaurentPoly::monomial(Rational(1), 3 * r * r - r);
          out.mul_laurent(d);
        } else if (b.kind == 1) {
          out.mul_monomial(Rational(1), 3 * r * r + r);
        } else {
          out.mul_monomial(Rational(-1), 3 * r * r + 2 * r);
        }
        return out;
      };
    case 10:
      return [](long long k) {
        Branch b = branch_of(k);
        long long r = b.r;
        PochFraction out(geometric(k + 1, 1));
        if (b.kind == 0) {
          LaurentPoly d = LaurentPoly::monomial(Rational(1), 6 * r * r - r);
          d -= LaurentPoly::monomial(Rational(1), 6 * r * r - 2 * r);
          out.mul_laurent(d);
        } else if (b.kind == 1) {
          out.mul_monomial(Rational(1), 6 * r * r + 2 * r);
        } else {
          out.mul_monomial(Rational(-1), 6 * r * r + 7 * r + 2);
        }
        return out;
      };
    default:
      throw std::invalid_argument("bailey_pair: index must be in 1..10");
  }
}

PochSeq beta_sequence(int which) {
  switch (which) {
    case 1:
      return [](long long k) {
        PochFraction out = PochFraction::one();
        out.mul_poch(2, 2 * k, -1);
        return out;
      };
    case 2:
      return [](long long k) {
        PochFraction out = PochFraction::monomial(Rational(1), k);
        out.mul_poch(2, 2 * k, -1);
        return out;
      };
    case 3:
      return [](long long k) {
        PochFraction out = PochFraction::monomial(Rational(1), k * k);
        out.mul_poch(2, 2 * k, -1);
        return out;
      };
    case 4:
      return [](long long k) {
        PochFraction out = PochFraction::monomial(Rational(1), k * k + k);
        out.mul_poch(2, 2 * k, -1);
        return out;
      };
    case 5:
      return [](long long k) {
        PochFraction out = PochFraction::one();
        out.mul_poch(1, 2 * k, -1);
        return out;
      };
    case 6:
      return [](long long k) {
        PochFraction out = PochFraction::monomial(Rational(1), k * k - k);
        out.mul_poch(1, 2 * k, -1);
        return out;
      };
    case 7:
      return [](long long k) {
        PochFraction out = PochFraction::monomial(Rational(1), k * k);
        out.mul_poch(2, 2 * k, -1);
        return out;
      };
    case 8:
      return [](long long k) {
        PochFraction out = PochFraction::one();
        out.mul_poch(2, 2 * k, -1);
        return out;
      };
    case 9:
      return [](long long k) {
        PochFraction out = PochFraction::monomial(Rational(1), k * k + k);
        out.mul_one_plus(1, 1);
        out.mul_poch(2, 2 * k, -1);
        out.mul_one_plus(k + 1, -1);
        return out;
      };
    case 10:
      return [](long long k) {
        PochFraction out = PochFraction::one();
        out.mul_one_plus(1, 1);
        out.mul_poch(2, 2 * k, -1);
        out.mul_one_plus(k + 1, -1);
        return out;
      };
    default:
      throw std::invalid_argument("bailey_pair: index must be in 1..10");
  }
}

Rational parity_sign(long long k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

BaileyPair bailey_pair(int which) {
  if (which < 1 || which > 10)
    throw std::invalid_argument("bailey_pair: index must be in 1..10");
  return {which, which <= 6 ? 1 : 2, alpha_sequence(which), beta_sequence(which)};
}

PochFraction pair_beta_from_alpha(const BaileyPair& bp, long long n) {
  PochFraction out;
  for (long long k = 0; k <= n; ++k) {
    PochFraction t = bp.alpha(k);
    t.mul_poch(1, n - k, -1);
    t.mul_poch(bp.rel + 1, n + k, -1);
    out += t;
  }
  return out;
}

PochFraction pair_beta_alternate(const BaileyPair& bp, long long n) {
  PochFraction out;
  for (long long k = 0; k <= n; ++k) {
    PochFraction t = bp.alpha(k);
    t.mul_poch(-n, k, 1);
    t.mul_poch(bp.rel + n + 1, k, -1);
    t.mul_monomial(parity_sign(k), n * k - binom2(k));
    out += t;
  }
  out.mul_poch(1, n, -1);
  out.mul_poch(bp.rel + 1, n, -1);
  return out;
}

bool verify_pair(const BaileyPair& bp, long long n_max) {
  for (long long n = 0; n <= n_max; ++n) {
    PochFraction expect = bp.beta(n);
    if (pair_beta_from_alpha(bp, n) != expect) return false;
    if (pair_beta_alternate(bp, n) != expect) return false;
  }
  return true;
}

BaileyPair bailey_lemma(const BaileyPair& bp) {
  int rel = bp.rel;
  PochSeq a = bp.alpha;
  PochSeq b = bp.beta;
  PochSeq alpha = [rel, a](long long n) {
    PochFraction t = a(n);
    t.mul_monomial(Rational(1), rel * n + n * n);
    return t;
  };
  PochSeq beta = [rel, b](long long n) {
    PochFraction out;
    for (long long j = 0; j <= n; ++j) {
      PochFraction t = b(j);
      t.mul_monomial(Rational(1), rel * j + j * j);
      t.mul_poch(1, n - j, -1);
      out += t;
    }
    return out;
  };
  return {0, rel, alpha, beta};
}

PochSeq star_sequence(const PochSeq& s) {
  return [s](long long n) {
    PochFraction first = s(n);
    first.mul_factor(2, 1);
    first.mul_factor(2 * n + 2, -1);
    if (n == 0) return first;  // the shifted term carries s_{-1} = 0
    PochFraction second = s(n - 1);
    second.mul_factor(2, 1);
    second.mul_monomial(Rational(1), 2 * n);
    second.mul_factor(2 * n, -1);
    return first - second;
  };
}

BaileyPair bailey_lattice(const BaileyPair& bp) {
  if (bp.rel != 2)
    throw std::invalid_argument("bailey_lattice: input must be relative to q^2");
  return {0, 1, star_sequence(bp.alpha), bp.beta};
}

PochSeq hat_sequence(const PochSeq& s) {
  return [s](long long k) {
    PochFraction t = s(k);
    t.mul_factor(1, 1);
    t.mul_factor(k + 1, -1);
    return t;
  };
}

BaileyPair dagger_transform(const BaileyPair& bp, const LaurentPoly& b) {
  if (bp.rel != 1 || b != LaurentPoly::monomial(Rational(-1), 1))
    throw std::invalid_argument(
        "dagger_transform: supported only for pairs relative to q with b = -q");
  PochSeq a = bp.alpha;
  PochSeq bb = bp.beta;
  // With a = q and b = -q: aq/b = -q, bq = -q^2 and -b = q, so every piece
  // below is a product of (1 +- q^j) factors and monomials.
  PochSeq alpha = [a](long long k) {
    PochFraction pre = PochFraction::one();
    pre.mul_factor(2 * k + 2, 1);                                  // 1 - aq^{2k+1}
    for (long long i = 1; i <= k; ++i) pre.mul_one_plus(i, 1);     // (aq/b)_k
    pre.mul_monomial(Rational(1), k + binom2(k));                  // (-b)^k q^{k(k-1)/2}
    pre.mul_factor(2, -1);                                         // 1/(1 - aq)
    for (long long i = 2; i <= k + 1; ++i) pre.mul_one_plus(i, -1);  // 1/(bq)_k
    PochFraction sum;
    for (long long j = 0; j <= k; ++j) {
      PochFraction t = a(j);
      for (long long i = 1; i <= j; ++i) {
        t.mul_one_plus(i, 1);   // (b)_j
        t.mul_one_plus(i, -1);  // 1/(aq/b)_j
      }
      t.mul_monomial(Rational(1), -j - binom2(j));  // (-b)^{-j} q^{-j(j-1)/2}
      sum += t;
    }
    return pre * sum;
  };
  PochSeq beta = [bb](long long k) {
    PochFraction t = bb(k);
    for (long long i = 1; i <= k; ++i) t.mul_one_plus(i, 1);       // (b)_k
    for (long long i = 2; i <= k + 1; ++i) t.mul_one_plus(i, -1);  // 1/(bq)_k
    return t;
  };
  return {0, 2, alpha, beta};
}

BaileyPair dual_pair(const BaileyPair& bp) {
  if (bp.rel != 2)
    throw std::invalid_argument("dual_pair: input must be relative to q^2");
  PochSeq a = bp.alpha;
  PochSeq b = bp.beta;
  PochSeq alpha = [a](long long k) {
    PochFraction t = a(k).substitute_inverse();
    t.mul_monomial(Rational(1), k * k + 2 * k);
    return t;
  };
  PochSeq beta = [b](long long k) {
    PochFraction t = b(k).substitute_inverse();
    t.mul_monomial(Rational(1), -k * k - 3 * k);
    return t;
  };
  return {0, 2, alpha, beta};
}

PochFraction chained_sum_lhs(const BaileyPair& bp, long long p, long long n) {
  if (p < 1) throw std::invalid_argument("chained_sum_lhs: p must be positive");
  if (n < 1) throw std::invalid_argument("chained_sum_lhs: n must be positive");
  long long delta = bp.rel == 1 ? 0 : 1;
  PochFraction total;
  // enumerate weakly decreasing tuples n-1 >= n_p >= ... >= n_1 >= 0
  std::vector<long long> idx(static_cast<size_t>(p), 0);
  auto emit = [&]() {
    long long np = idx[static_cast<size_t>(p - 1)];
    PochFraction t = bp.beta(n - np - 1);
    t.mul_monomial(Rational(1), (n - np - 1) * (n - np + delta));
    t.mul_poch(1, np, -1);
    for (long long i = 1; i <= p - 1; ++i) {
      long long ni = idx[static_cast<size_t>(i - 1)];
      long long ni1 = idx[static_cast<size_t>(i)];
      t.mul_monomial(Rational(1), (n - ni - 1) * (n - ni + delta));
      t.mul_laurent(q_binomial(ni1, ni));
    }
    total += t;
  };
  // level runs from the outermost index downward
  std::function<void(long long, long long)> walk = [&](long long level, long long cap) {
    if (level < 0) {
      emit();
      return;
    }
    for (long long v = 0; v <= cap; ++v) {
      idx[static_cast<size_t>(level)] = v;
      walk(level - 1, v);
    }
  };
  walk(p - 1, n - 1);
  return total;
}

PochFraction chained_sum_rhs(const BaileyPair& bp, long long p, long long n,
                             ChainVariant variant) {
  if (p < 1) throw std::invalid_argument("chained_sum_rhs: p must be positive");
  if (n < 1) throw std::invalid_argument("chained_sum_rhs: n must be positive");
  if (variant == ChainVariant::rel_q && bp.rel != 1)
    throw std::invalid_argument("chained_sum_rhs: variant needs a pair relative to q");
  if (variant != ChainVariant::rel_q && bp.rel != 2)
    throw std::invalid_argument("chained_sum_rhs: variant needs a pair relative to q^2");

  PochFraction total;
  if (variant == ChainVariant::rel_q2_star) {
    PochSeq scaled = [&](long long k) {
      PochFraction t = bp.alpha(k);
      t.mul_monomial(Rational(1), p * (k * k + 2 * k));
      return t;
    };
    PochSeq starred = star_sequence(scaled);
    for (long long k = 0; k <= n - 1; ++k) {
      PochFraction t = starred(k);
      t.mul_poch(1 - n, k, 1);
      t.mul_poch(1 + n, k, -1);
      t.mul_monomial(parity_sign(k), n * k - binom2(k + 1));
      total += t;
    }
    total.mul_poch(1, n - 1, -1);
    total.mul_poch(2, n - 1, -1);
    return total;
  }

  for (long long k = 0; k <= n - 1; ++k) {
    PochFraction t = bp.alpha(k);
    t.mul_poch(1 - n, k, 1);
    if (variant == ChainVariant::rel_q) {
      t.mul_poch(1 + n, k, -1);
      t.mul_monomial(parity_sign(k), n * k - binom2(k + 1) + p * (k * k + k));
    } else {
      t.mul_poch(2 + n, k, -1);
      t.mul_monomial(parity_sign(k), n * k - binom2(k + 1) + p * (k * k + 2 * k));
    }
    total += t;
  }
  if (variant == ChainVariant::rel_q) {
    total.mul_poch(1, n - 1, -1);
    total.mul_poch(2, n - 1, -1);
  } else {
    total.mul_factor(1, 1);
    total.mul_factor(2, 1);
    total.mul_poch(1, n - 1, -1);
    total.mul_poch(1, n + 1, -1);
  }
  return total;
}

bool verify_chained_sum(const BaileyPair& bp, long long p, long long n,
                        ChainVariant variant) {
  return chained_sum_lhs(bp, p, n) == chained_sum_rhs(bp, p, n, variant);
}

int closed_form_family(int pair_id) {
  static const int table[10] = {6, 7, 3, 4, 8, 1, 5, 9, 2, 10};
  if (pair_id < 1 || pair_id > 10)
    throw std::invalid_argument("closed_form_family: index must be in 1..10");
  return table[pair_id - 1];
}

Cyclotomic closed_form_eval(int pair_id, long long p, const RootOfUnity& z) {
  if (p < 1) throw std::invalid_argument("closed_form_eval: p must be positive");
  BaileyPair bp = bailey_pair(pair_id);
  const long long N = z.N;
  LaurentPoly total;

  if (pair_id <= 6) {
    for (long long k = 0; k <= N - 1; ++k) {
      PochFraction t = bp.alpha(k);
      t.mul_monomial(parity_sign(k), binom2(k + 1) + (p - 1) * (k * k + k));
      total += t.to_laurent();
    }
    LaurentPoly pre;
    switch (pair_id) {
      case 2:
        pre = LaurentPoly::monomial(Rational(1), 1);
        break;
      case 3:
        pre = LaurentPoly::monomial(Rational(1), -1);
        break;
      case 5:  // -q(1 - q)
        pre = LaurentPoly::monomial(Rational(-1), 1) + LaurentPoly::monomial(Rational(1), 2);
        break;
      case 6:  // -q^{-1}(1 - q)
        pre = LaurentPoly::monomial(Rational(-1), -1) + LaurentPoly::one();
        break;
      default:
        pre = LaurentPoly::one();
        break;
    }
    total *= pre;
    return eval_laurent_at_root(total, z.M, N, N);
  }

  if (pair_id <= 8) {
    PochSeq scaled = [&](long long k) {
      PochFraction t = bp.alpha(k);
      t.mul_monomial(Rational(1), p * (k * k + 2 * k));
      return t;
    };
    PochSeq starred = star_sequence(scaled);
    for (long long k = 0; k <= N - 1; ++k) {
      PochFraction t = starred(k);
      t.mul_monomial(parity_sign(k), -binom2(k + 1));
      total += t.to_laurent();
    }
    total.mul_monomial(Rational(1), pair_id == 7 ? p - 1 : p);
    return eval_laurent_at_root(total, z.M, N, N);
  }

  PochSeq hatted = hat_sequence(bp.alpha);
  for (long long k = 0; k <= N - 2; ++k) {
    PochFraction t = hatted(k);
    t.mul_monomial(parity_sign(k), -binom2(k + 1) + p * (k * k + 2 * k));
    total += t.to_laurent();
  }
  PochFraction last = hatted(N - 1);
  last.mul_monomial(Rational(1, 2), -p);
  total += last.to_laurent();
  total.mul_monomial(Rational(1), p);
  Cyclotomic out = eval_laurent_at_root(total, z.M, N, N);
  out += Cyclotomic::from_rational(Rational(1, 2), N);
  return out;
}

bool verify_closed_form(int pair_id, long long p, const RootOfUnity& z) {
  return closed_form_eval(pair_id, p, z) ==
         multisum_eval(closed_form_family(pair_id), p, z);
}

}  // namespace qru

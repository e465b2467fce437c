#pragma once

// Composition-indexed binomial sums and their closed forms. Each *_enumerated
// function walks compositions literally; its partner returns the collapsed
// binomial expression. The pairs are kept separate on purpose so the verify
// suite can diff them.

#include "stirling/exactnum.hpp"

#include <vector>

namespace stirling {

// Per-part binomial shifts for the multi-binomial sum; requires
// 0 <= alphas[i] <= betas[i] part by part.
struct MultiParams {
  std::vector<long long> alphas;
  std::vector<long long> betas;

  MultiParams(std::vector<long long> a, std::vector<long long> b);
  unsigned parts() const { return static_cast<unsigned>(alphas.size()); }
};

// sum over compositions (k_1..k_r) of k: prod_i C(k_i + alpha_i, beta_i),
// evaluated by enumeration.
Count multi_binomial_sum(const MultiParams& mp, long long k);

// Its closed form: C(k + sum(alpha) + r - 1, sum(beta) + r - 1).
Count multi_binomial_closed(const MultiParams& mp, long long k);

// sum over compositions of n into r parts of k_1*...*k_r  ==  C(n+r-1, 2r-1).
Count product_sum_all(unsigned r, long long n);

// sum over compositions of n into r parts of k_1*...*k_p  ==  C(n+r-1, r+p-1).
Count product_sum_partial(unsigned r, unsigned p, long long n);
Count product_sum_partial_enumerated(unsigned r, unsigned p, long long n);

// sum over compositions of n into k parts of prod_j (i_j + alpha)
//   ==  sum_j C(k,j) C(n+k-1, n-j) alpha^(k-j),   alpha >= 0.
Count shifted_product_sum(unsigned k, long long n, long long alpha);
Count shifted_product_sum_enumerated(unsigned k, long long n, long long alpha);

// sum over compositions of n into k parts of prod_{j<=r} (i_j + s)
//   ==  sum_j C(r,j) C(n+k+j-1, n) (s-1)^(r-j),   r <= k, s >= 1.
Count dual_partial_shifted_sum(unsigned k, unsigned r, long long n, long long s);
Count dual_partial_shifted_sum_enumerated(unsigned k, unsigned r, long long n,
                                          long long s);

}  // namespace stirling

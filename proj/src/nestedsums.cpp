#include "stirling/nestedsums.hpp"

#include "stirling/compositions.hpp"

namespace stirling {

MultiParams::MultiParams(std::vector<long long> a, std::vector<long long> b)
    : alphas(std::move(a)), betas(std::move(b)) {
  if (alphas.size() != betas.size())
    throw DomainError("alphas and betas must have equal length");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i] < 0 || betas[i] < alphas[i])
      throw DomainError("requires 0 <= alpha_i <= beta_i");
  }
}

Count multi_binomial_sum(const MultiParams& mp, long long k) {
  Count sum(0ULL);
  for (const auto& comp : CompositionRange(k, mp.parts())) {
    Count term(1ULL);
    for (std::size_t i = 0; i < comp.size(); ++i)
      term *= binomial(comp[i] + mp.alphas[i], mp.betas[i]);
    sum += term;
  }
  return sum;
}

Count multi_binomial_closed(const MultiParams& mp, long long k) {
  long long alpha = 0, beta = 0;
  for (std::size_t i = 0; i < mp.alphas.size(); ++i) {
    alpha += mp.alphas[i];
    beta += mp.betas[i];
  }
  const long long r = static_cast<long long>(mp.parts());
  return binomial(k + alpha + r - 1, beta + r - 1);
}

Count product_sum_all(unsigned r, long long n) {
  return binomial(n + static_cast<long long>(r) - 1, 2LL * r - 1);
}

Count product_sum_partial(unsigned r, unsigned p, long long n) {
  if (p > r) throw DomainError("requires p <= r");
  return binomial(n + static_cast<long long>(r) - 1,
                  static_cast<long long>(r) + p - 1);
}

Count product_sum_partial_enumerated(unsigned r, unsigned p, long long n) {
  if (p > r) throw DomainError("requires p <= r");
  Count sum(0ULL);
  for (const auto& comp : CompositionRange(n, r)) {
    Count term(1ULL);
    for (unsigned j = 0; j < p; ++j)
      term *= Count(static_cast<unsigned long long>(comp[j]));
    sum += term;
  }
  return sum;
}

Count shifted_product_sum(unsigned k, long long n, long long alpha) {
  if (alpha < 0) throw DomainError("requires alpha >= 0");
  if (k == 0) return Count(n == 0 ? 1ULL : 0ULL);  // empty composition
  Count sum(0ULL);
  for (long long j = 0; j <= static_cast<long long>(k); ++j) {
    sum += binomial(k, j) * binomial(n + k - 1, n - j) *
           pow_count(Count(static_cast<unsigned long long>(alpha)), k - j);
  }
  return sum;
}

Count shifted_product_sum_enumerated(unsigned k, long long n, long long alpha) {
  if (alpha < 0) throw DomainError("requires alpha >= 0");
  Count sum(0ULL);
  for (const auto& comp : CompositionRange(n, k)) {
    Count term(1ULL);
    for (long long part : comp)
      term *= Count(static_cast<unsigned long long>(part + alpha));
    sum += term;
  }
  return sum;
}

Count dual_partial_shifted_sum(unsigned k, unsigned r, long long n, long long s) {
  if (r > k) throw DomainError("requires r <= k");
  if (s < 1) throw DomainError("requires s >= 1");
  if (k == 0) return Count(n == 0 ? 1ULL : 0ULL);  // empty composition
  Count sum(0ULL);
  for (long long j = 0; j <= static_cast<long long>(r); ++j) {
    sum += binomial(r, j) * binomial(n + k + j - 1, n) *
           pow_count(Count(static_cast<unsigned long long>(s - 1)),
                     static_cast<unsigned long long>(r) - j);
  }
  return sum;
}

Count dual_partial_shifted_sum_enumerated(unsigned k, unsigned r, long long n,
                                          long long s) {
  if (r > k) throw DomainError("requires r <= k");
  if (s < 1) throw DomainError("requires s >= 1");
  Count sum(0ULL);
  for (const auto& comp : CompositionRange(n, k)) {
    Count term(1ULL);
    for (unsigned j = 0; j < r; ++j)
      term *= Count(static_cast<unsigned long long>(comp[j] + s));
    sum += term;
  }
  return sum;
}

}  // namespace stirling

#include "stirling/identities.hpp"

#include "stirling/compositions.hpp"
#include "stirling/nestedsums.hpp"

namespace stirling {

namespace {

long long lls(unsigned v) { return static_cast<long long>(v); }

// Ways to distribute m labeled elements over p distinguished boxes with
// every box receiving at least `minimum` of them.
Count occupancy_fill(unsigned p, unsigned minimum, long long m) {
  Count total(0ULL);
  for (const auto& parts : CompositionRange(m, p, minimum)) {
    const std::vector<unsigned long long> sizes(parts.begin(), parts.end());
    total += multinomial(static_cast<unsigned long long>(m), sizes);
  }
  return total;
}

}  // namespace

SidePair check_s1_reduction(const TriangleStore& store, unsigned s, unsigned r,
                            unsigned p, long long n, long long k) {
  if (p > r) throw DomainError("requires p <= r");
  const Count lhs = store.value(Params(Kind::FirstKind, r, s), {n, k});
  const Params lower(Kind::FirstKind, r - p, s);
  Count rhs(0ULL);
  for (long long i = 0; i <= n - lls(p) - lls(s) * (k - lls(p)); ++i) {
    if (i > n - lls(r)) break;
    // compositions of i into p parts each >= s-1
    const Count spread = composition_count(i - lls(p) * (lls(s) - 1), p);
    if (spread.is_zero()) continue;
    rhs += falling_factorial(n - r, i) * spread *
           store.value(lower, {n - lls(p) - i, k - lls(p)});
  }
  return {lhs, rhs};
}

SidePair check_s2_reduction_powers(const TriangleStore& store, unsigned s,
                                   unsigned r, unsigned p, long long n,
                                   long long k) {
  if (p > r) throw DomainError("requires p <= r");
  const Count lhs = store.value(Params(Kind::SecondKind, r, s), {n, k});
  const Params lower(Kind::SecondKind, r - p, s);
  Count rhs(0ULL);
  const long long e = n - lls(p) * (lls(s) - 1) - lls(r);
  if (e >= 0) {
    // (n-r)! / ((s-1)!^p (n-p(s-1)-r)!) as a multinomial
    std::vector<unsigned long long> mins(p, static_cast<unsigned long long>(s) - 1);
    const Count front = multinomial(static_cast<unsigned long long>(n - r), mins);
    for (long long i = 0; i <= e; ++i) {
      rhs += front * binomial(e, i) *
             store.value(lower, {i + lls(r) - lls(p), k - lls(p)}) *
             pow_count(Count(p), static_cast<unsigned long long>(e - i));
    }
  }
  return {lhs, rhs};
}

SidePair check_s2_reduction_occupancy(const TriangleStore& store, unsigned s,
                                      unsigned r, unsigned p, long long n,
                                      long long k) {
  if (p > r) throw DomainError("requires p <= r");
  const Count lhs = store.value(Params(Kind::SecondKind, r, s), {n, k});
  const Params lower(Kind::SecondKind, r - p, s);
  Count rhs(0ULL);
  for (long long i = 0; i <= n - lls(r); ++i) {
    const Count tri = store.value(lower, {i + lls(r) - lls(p), k - lls(p)});
    if (tri.is_zero()) continue;
    rhs += binomial(n - lls(r), i) * occupancy_fill(p, s - 1, n - lls(r) - i) * tri;
  }
  return {lhs, rhs};
}

SidePair check_s2_reduction_binomial(const TriangleStore& store, unsigned s,
                                     unsigned r, unsigned p, long long n,
                                     long long k) {
  if (p > r) throw DomainError("requires p <= r");
  const Count lhs = store.value(Params(Kind::SecondKind, r, s), {n, k});
  const Params lower(Kind::SecondKind, r - p, s);
  Count rhs(0ULL);
  for (long long i = 0; k >= lls(r) && i <= lls(p); ++i) {
    const long long picked = i * (lls(s) - 1);
    if (picked > n - lls(r) || n < lls(r)) continue;
    // (i(s-1))! / (s-1)!^i as a multinomial over i minimum-size tails
    std::vector<unsigned long long> tails(static_cast<std::size_t>(i),
                                          static_cast<unsigned long long>(s) - 1);
    rhs += falling_factorial(static_cast<unsigned long long>(k - lls(r) + lls(p) - i),
                             static_cast<unsigned long long>(lls(p) - i)) *
           binomial(p, i) * binomial(n - lls(r), picked) *
           multinomial(static_cast<unsigned long long>(picked), tails) *
           store.value(lower, {n - lls(p) - picked, k - i});
  }
  return {lhs, rhs};
}

SidePair check_lah_reduction(const TriangleStore& store, unsigned s, unsigned r,
                             unsigned p, long long n, long long k) {
  if (p > r) throw DomainError("requires p <= r");
  const Count lhs = store.value(Params(Kind::Lah, r, s), {n, k});
  const Params lower(Kind::Lah, r - p, s);
  Count rhs(0ULL);
  for (long long j = 0; j <= n - lls(s) * k; ++j) {
    const long long removed = j + (lls(s) - 1) * lls(p);
    if (removed > n - lls(r)) continue;
    // slack j over the p removed lists with (i+s) head positions each
    const Count weights = shifted_product_sum(p, j, lls(s));
    if (weights.is_zero()) continue;
    rhs += falling_factorial(n - r, removed) * weights *
           store.value(lower, {n - lls(s) * lls(p) - j, k - lls(p)});
  }
  return {lhs, rhs};
}

std::vector<std::tuple<std::string, Count, Count>> check_cross_recurrences(
    const TriangleStore& store, unsigned s, unsigned r, long long n, long long k) {
  if (r == 0) throw DomainError("cross recurrences need r >= 1");
  std::vector<std::tuple<std::string, Count, Count>> out;

  {
    const Count lhs = store.value(Params(Kind::FirstKind, r, s), {n, k});
    const Params lower(Kind::FirstKind, r - 1, s);
    Count rhs(0ULL);
    for (long long i = lls(s) - 1; i <= n - lls(s) * (k - 1) - 1; ++i) {
      if (i < 0 || i > n - lls(r)) continue;
      rhs += falling_factorial(n - r, i) * store.value(lower, {n - i - 1, k - 1});
    }
    out.emplace_back("first-kind-cross", lhs, rhs);
  }
  {
    const Count lhs = store.value(Params(Kind::SecondKind, r, s), {n, k});
    const Params lower(Kind::SecondKind, r - 1, s);
    Count rhs = binomial(n - lls(r), lls(s) - 1) *
                store.value(lower, {n - lls(s), k - 1});
    if (k - lls(r) + 1 >= 0) {
      rhs += Count(static_cast<unsigned long long>(k - lls(r) + 1)) *
             store.value(lower, {n - 1, k});
    }
    out.emplace_back("second-kind-cross", lhs, rhs);
  }
  {
    const Count lhs = store.value(Params(Kind::Lah, r, s), {n, k});
    const Params lower(Kind::Lah, r - 1, s);
    Count rhs(0ULL);
    for (long long i = lls(s) - 1; i <= n - lls(s) * (k - 1) - 1; ++i) {
      if (i < 0 || i > n - lls(r)) continue;
      rhs += Count(static_cast<unsigned long long>(i + 1)) *
             falling_factorial(n - r, i) * store.value(lower, {n - i - 1, k - 1});
    }
    out.emplace_back("lah-cross", lhs, rhs);
  }
  return out;
}

SidePair check_convolution(const TriangleStore& store, Kind kind, unsigned s,
                           std::span<const long long> ks,
                           std::span<const long long> rs, long long n) {
  if (ks.size() != rs.size() || ks.size() < 2)
    throw DomainError("need matching k/r splits with at least two parts");
  long long k = 0, r = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 0 || rs[i] < 0) throw DomainError("split parts must be >= 0");
    k += ks[i];
    r += rs[i];
  }

  std::vector<unsigned long long> kparts(ks.begin(), ks.end());
  const Count lhs =
      multinomial(static_cast<unsigned long long>(k), kparts) *
      store.value(Params(kind, static_cast<unsigned>(r), s), {n + r, k + r});

  Count rhs(0ULL);
  for (const auto& comp : CompositionRange(n, static_cast<unsigned>(ks.size()))) {
    std::vector<unsigned long long> lparts(comp.begin(), comp.end());
    Count term = multinomial(static_cast<unsigned long long>(n), lparts);
    for (std::size_t i = 0; i < comp.size() && !term.is_zero(); ++i) {
      term *= store.value(Params(kind, static_cast<unsigned>(rs[i]), s),
                          {comp[i] + rs[i], ks[i] + rs[i]});
    }
    rhs += term;
  }
  return {lhs, rhs};
}

SidePair check_shifted_product_closed_forms(unsigned s, unsigned r, long long n,
                                            long long k) {
  if (lls(r) > k) throw DomainError("requires r <= k");
  if (s == 0) throw DomainError("requires s >= 1");
  const Count lhs = dual_partial_shifted_sum(static_cast<unsigned>(k), r, n, s);
  Count rhs(0ULL);
  if (k == 0) {
    rhs = Count(n == 0 ? 1ULL : 0ULL);
  } else {
    for (long long j = 0; j <= lls(r); ++j) {
      rhs += binomial(r, j) * binomial(n + k - 1, k + j - 1) *
             pow_count(Count(s), lls(r) - j);
    }
  }
  return {lhs, rhs};
}

}  // namespace stirling

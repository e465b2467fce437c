#include "stirling/closedform.hpp"

namespace stirling {

namespace {

long long lls(unsigned v) { return static_cast<long long>(v); }

// Explicit Lah value as a total function: 0 outside the domain, so that
// expansions referencing shifted cells can let vanishing terms vanish.
Count lah_total(unsigned s, long long n, long long k) {
  if (k < 0 || n < 0 || n < lls(s) * k) return Count(0ULL);
  if (k == 0) return Count(n == 0 ? 1ULL : 0ULL);
  return falling_factorial(n, n - k) * binomial(n - (lls(s) - 1) * k - 1, k - 1);
}

}  // namespace

Count lah_explicit(unsigned s, long long n, long long k) {
  if (s == 0) throw DomainError("association order s must be >= 1");
  if (n < 0 || k < 0) return Count(0ULL);
  if (n < lls(s) * k) throw DomainError("lah_explicit requires n >= s*k");
  return lah_total(s, n, k);
}

bool lah_rational_recurrence_check(const TriangleStore& store, unsigned s,
                                   long long n, long long k) {
  if (n < lls(s) * k || k < 1) throw DomainError("requires n >= s*k and k >= 1");
  const Params p(Kind::Lah, 0, s);
  const Rat lhs = rat_of(store.value(p, {n, k}));
  Rat rhs = rat_of(falling_factorial(n, s)) / k * rat_of(store.value(p, {n - s, k - 1}));
  rhs += Rat(n) * rat_of(store.value(p, {n - 1, k}));
  return lhs == rhs;
}

Count lah_vandermonde(unsigned s, long long n, long long k, long long p) {
  if (s == 0) throw DomainError("association order s must be >= 1");
  if (k < 1 || n < lls(s) * k) throw DomainError("requires n >= s*k and k >= 1");
  if (p < 0 || p > n - lls(s) * k + k)
    throw DomainError("slide width p out of range");
  Rat acc = 0;
  for (long long i = 0; i <= p; ++i) {
    const Count cell = lah_total(s, n - (lls(s) - 1) * i - p, k - i);
    if (cell.is_zero()) continue;  // also guards the factorial argument below
    acc += rat_of(factorial(k - i)) / rat_of(factorial(n - p - (lls(s) - 1) * i)) *
           rat_of(binomial(p, i)) * rat_of(cell);
  }
  return count_of(rat_of(falling_factorial(n, n - k)) * acc);
}

Count lah_vertical(unsigned s, long long n, long long k) {
  if (s == 0) throw DomainError("association order s must be >= 1");
  if (k < 0 || n < 0) return Count(0ULL);
  if (k == 0) return Count(n == 0 ? 1ULL : 0ULL);
  Count acc(0ULL);
  for (long long i = lls(s) * (k - 1); i <= n - lls(s); ++i) {
    if (i < 0) continue;
    acc += factorial(n - i) * binomial(n - 1, i) * lah_total(s, i, k - 1);
  }
  return acc;
}

Count s1_explicit(unsigned s, unsigned r, long long n, long long k) {
  if (s == 0) throw DomainError("association order s must be >= 1");
  if (k < 0 || n < 0 || k < lls(r) || n < lls(s) * k) return Count(0ULL);
  if (k == 0) return Count(n == 0 ? 1ULL : 0ULL);
  Rat acc = 0;
  for (long long m = 0; m <= n - lls(s) * k; ++m) {
    const Count spread = composition_count(m, r);  // mass m over the r cycles
    if (spread.is_zero()) continue;
    Rat inner = 0;
    for (const auto& comp :
         CompositionRange(n - lls(s) * k - m, static_cast<unsigned>(k - r))) {
      Rat term = 1;
      for (long long part : comp) term /= Rat(part + lls(s));
      inner += term;
    }
    acc += rat_of(spread) * inner;
  }
  return count_of(rat_of(falling_factorial(n - r, n - k)) * acc);
}

Count s2_explicit(unsigned s, unsigned r, long long n, long long k) {
  if (s == 0) throw DomainError("association order s must be >= 1");
  if (k < 0 || n < 0 || k < lls(r) || n < lls(s) * k) return Count(0ULL);
  if (k == 0) return Count(n == 0 ? 1ULL : 0ULL);
  Rat acc = 0;
  for (const auto& comp :
       CompositionRange(n - lls(s) * k, static_cast<unsigned>(k))) {
    Rat term = 1;
    for (std::size_t j = 0; j < comp.size(); ++j) {
      const long long shift = j < r ? lls(s) - 1 : lls(s);
      term /= rat_of(factorial(comp[j] + shift));
    }
    acc += term;
  }
  return count_of(rat_of(falling_factorial(n - r, n - k)) * acc);
}

Count lah_r_explicit(unsigned s, unsigned r, long long n, long long k) {
  if (s == 0) throw DomainError("association order s must be >= 1");
  if (k < 0 || n < 0 || k < lls(r) || n < lls(s) * k) return Count(0ULL);
  if (k == 0) return Count(n == 0 ? 1ULL : 0ULL);
  Count sum(0ULL);
  for (long long j = 0; j <= lls(r); ++j) {
    sum += binomial(r, j) * binomial(n - (lls(s) - 1) * k - 1, k + j - 1) *
           pow_count(Count(s), r - j);
  }
  return falling_factorial(n - r, n - k) * sum;
}

Count lah_r_explicit_dual(unsigned s, unsigned r, long long n, long long k) {
  if (s == 0) throw DomainError("association order s must be >= 1");
  if (k < 0 || n < 0 || k < lls(r) || n < lls(s) * k) return Count(0ULL);
  if (k == 0) return Count(n == 0 ? 1ULL : 0ULL);
  Count sum(0ULL);
  for (long long j = 0; j <= lls(r); ++j) {
    sum += binomial(r, j) * binomial(n + j - (lls(s) - 1) * k - 1, k + j - 1) *
           pow_count(Count(s - 1), r - j);
  }
  return falling_factorial(n - r, n - k) * sum;
}

Count lah_r_composition_sum(unsigned s, unsigned r, long long n, long long k) {
  if (s == 0) throw DomainError("association order s must be >= 1");
  if (k < 0 || n < 0 || k < lls(r) || n < lls(s) * k) return Count(0ULL);
  if (k == 0) return Count(n == 0 ? 1ULL : 0ULL);
  Count sum(0ULL);
  for (const auto& comp :
       CompositionRange(n - lls(s) * k, static_cast<unsigned>(k))) {
    Count term(1ULL);
    for (unsigned j = 0; j < r; ++j)
      term *= Count(static_cast<unsigned long long>(comp[j] + lls(s)));
    sum += term;
  }
  return falling_factorial(n - r, n - k) * sum;
}

Count diagonal_value(Kind kind, unsigned s, unsigned r, long long n) {
  if (s == 0) throw DomainError("association order s must be >= 1");
  if (n < 0 || n < lls(s) * lls(r)) return Count(0ULL);
  switch (kind) {
    case Kind::FirstKind: {
      if (r == 0) return Count(n == 0 ? 1ULL : 0ULL);
      return factorial(n - r) * binomial(n - (lls(s) - 1) * r - 1, lls(r) - 1);
    }
    case Kind::SecondKind: {
      Count sum(0ULL);
      for (const auto& comp : CompositionRange(n - r, r, lls(s) - 1)) {
        std::vector<unsigned long long> parts(comp.begin(), comp.end());
        sum += multinomial(n - r, parts);
      }
      return sum;
    }
    case Kind::Lah:
      return lah_r_explicit(s, r, n, r);
  }
  return Count(0ULL);
}

}  // namespace stirling

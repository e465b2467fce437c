#include "stirling/exactnum.hpp"

#include <algorithm>

namespace stirling {

namespace {

constexpr unsigned long long kFactorialCacheCap = 64;

const std::vector<BigInt>& factorial_cache() {
  static const std::vector<BigInt> cache = [] {
    std::vector<BigInt> t(kFactorialCacheCap + 1);
    t[0] = 1;
    for (unsigned long long i = 1; i <= kFactorialCacheCap; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return cache;
}

}  // namespace

Count factorial(unsigned long long n) {
  const auto& cache = factorial_cache();
  if (n < cache.size()) return Count(cache[n]);
  BigInt v = cache.back();
  for (unsigned long long i = kFactorialCacheCap + 1; i <= n; ++i) v *= i;
  return Count(std::move(v));
}

Count binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return Count(0ULL);
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) here
  }
  return Count(std::move(r));
}

Count multinomial(unsigned long long n, std::span<const unsigned long long> parts) {
  unsigned long long used = 0;
  for (unsigned long long p : parts) {
    used += p;
    if (used > n) throw DomainError("multinomial parts exceed n");
  }
  BigInt r = factorial(n).get();
  for (unsigned long long p : parts) r /= factorial(p).get();
  r /= factorial(n - used).get();
  return Count(std::move(r));
}

Count multinomial(unsigned long long n, std::initializer_list<unsigned long long> parts) {
  std::vector<unsigned long long> v(parts);
  return multinomial(n, std::span<const unsigned long long>(v));
}

Count falling_factorial(unsigned long long n, unsigned long long k) {
  if (k > n) throw DomainError("falling_factorial requires k <= n");
  BigInt r = 1;
  for (unsigned long long i = 0; i < k; ++i) r *= n - i;
  return Count(std::move(r));
}

Count pow_count(const Count& base, unsigned long long exp) {
  BigInt r = 1;
  for (unsigned long long i = 0; i < exp; ++i) r *= base.get();
  return Count(std::move(r));
}

Rat rat_of(const Count& c) { return Rat(c.get()); }

bool is_nonneg_integer(const Rat& q) {
  return boost::multiprecision::denominator(q) == 1 &&
         boost::multiprecision::numerator(q) >= 0;
}

Count count_of(const Rat& q) {
  if (!is_nonneg_integer(q))
    throw IntegralityError("expected a nonnegative integer, got " + rat_str(q));
  return Count(BigInt(boost::multiprecision::numerator(q)));
}

std::string rat_str(const Rat& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace stirling

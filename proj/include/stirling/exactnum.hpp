#pragma once

// Exact arithmetic used everywhere else: arbitrary-precision nonnegative
// counts, exact rationals, and the handful of combinatorial primitives
// (factorial, binomial, multinomial, falling factorial) with total-function
// conventions chosen so that recurrences degrade correctly at the edges.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stirling {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Inputs outside an operation's mathematical domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A configured enumeration or truncation limit would be exceeded.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An intermediate that must be a nonnegative integer is not one; this
// indicates a bug, not bad input.
struct IntegralityError : std::logic_error {
  using std::logic_error::logic_error;
};

// Arbitrary-precision nonnegative integer. Closed under + and *;
// subtraction throws DomainError rather than wrapping below zero, so
// callers comparing counts must compare, not subtract.
class Count {
 public:
  Count() = default;
  Count(unsigned long long v) : v_(v) {}
  explicit Count(BigInt v) : v_(std::move(v)) {
    if (v_ < 0) throw DomainError("Count cannot be negative");
  }

  const BigInt& get() const { return v_; }
  std::string str() const { return v_.str(); }
  bool is_zero() const { return v_.is_zero(); }

  Count& operator+=(const Count& o) {
    v_ += o.v_;
    return *this;
  }
  Count& operator*=(const Count& o) {
    v_ *= o.v_;
    return *this;
  }
  friend Count operator+(Count a, const Count& b) { return a += b; }
  friend Count operator*(Count a, const Count& b) { return a *= b; }
  Count operator-(const Count& o) const {
    if (v_ < o.v_) throw DomainError("Count subtraction would go negative");
    Count r;
    r.v_ = v_ - o.v_;
    return r;
  }

  friend bool operator==(const Count&, const Count&) = default;
  friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
    return a.v_.compare(b.v_) <=> 0;
  }

 private:
  BigInt v_{0};
};

// n!; values up to a fixed cap are cached, larger ones computed directly.
Count factorial(unsigned long long n);

// Total binomial coefficient: 0 whenever k < 0, n < 0, or k > n.
Count binomial(long long n, long long k);

// n! / (parts[0]! * ... * parts[m-1]! * (n - sum)!); the remainder is an
// implicit final part. Throws DomainError if the parts sum past n.
Count multinomial(unsigned long long n, std::span<const unsigned long long> parts);
Count multinomial(unsigned long long n, std::initializer_list<unsigned long long> parts);

// n * (n-1) * ... * (n-k+1); throws DomainError if k > n.
Count falling_factorial(unsigned long long n, unsigned long long k);

// base^exp with 0^0 == 1.
Count pow_count(const Count& base, unsigned long long exp);

// Rational helpers. cpp_rational keeps lowest terms and a positive
// denominator on its own; these just bridge to Count.
Rat rat_of(const Count& c);
bool is_nonneg_integer(const Rat& q);
// Throws IntegralityError unless q is a nonnegative integer.
Count count_of(const Rat& q);
std::string rat_str(const Rat& q);

}  // namespace stirling

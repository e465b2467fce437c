#pragma once

// Truncated formal power series over exact rationals, plus the exponential
// generating functions whose coefficients reproduce the triangle columns.
// A Series carries its truncation order; binary operations truncate to the
// smaller order of their operands.

#include "stirling/exactnum.hpp"
#include "stirling/triangles.hpp"

#include <vector>

namespace stirling {

class Series {
 public:
  explicit Series(int order) : coeffs_(static_cast<std::size_t>(order) + 1, Rat(0)) {
    if (order < 0) throw DomainError("series order must be >= 0");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  void set_coeff(int i, Rat v) { coeffs_.at(static_cast<std::size_t>(i)) = std::move(v); }

  static Series constant(const Rat& c, int order);
  static Series monomial(const Rat& c, int degree, int order);

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rat> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Rat& c);
// Repeated squaring; pow(a, 0) is the constant 1 at a's order.
Series pow(const Series& a, unsigned long long e);

// 1/(1-x) to the given order.
Series geometric(int order);

// exp of a series with zero constant term (throws DomainError otherwise),
// via the coefficient recurrence b_n = (1/n) sum_j j a_j b_{n-j}.
Series exp_series(const Series& a);

// -ln(1-x) = sum_{i>=1} x^i/i.
Series log_inv_one_minus_x(int order);

// Column EGF: coefficient of x^n is T_r[n+r, k+r] / n! for the family p.
// The column index k counts free classes (beyond the r distinguished ones).
Series egf_column(const Params& p, unsigned k, int order);

// c_n * n!, which must be a nonnegative integer (IntegralityError if not);
// throws CapExceeded when n is past the truncation order.
Count coefficient_count(const Series& series, int n);

// The two-variable generating function with the class-marking variable
// specialized to the integer y: equals sum_k y^k * egf_column(p, k, order)
// summed over all k that contribute up to the truncation order.
Series double_egf_at(Kind kind, unsigned r, unsigned s, long long y, int order);

}  // namespace stirling

#include "stirling/fps.hpp"

#include <algorithm>

namespace stirling {

Series Series::constant(const Rat& c, int order) {
  Series s(order);
  s.set_coeff(0, c);
  return s;
}

Series Series::monomial(const Rat& c, int degree, int order) {
  Series s(order);
  if (degree < 0) throw DomainError("monomial degree must be >= 0");
  if (degree <= order) s.set_coeff(degree, c);
  return s;
}

Series add(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) out.set_coeff(i, a.coeff(i) + b.coeff(i));
  return out;
}

Series sub(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) out.set_coeff(i, a.coeff(i) - b.coeff(i));
  return out;
}

Series mul(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) {
    Rat c = 0;
    for (int j = 0; j <= i; ++j) c += a.coeff(j) * b.coeff(i - j);
    out.set_coeff(i, c);
  }
  return out;
}

Series scale(const Series& a, const Rat& c) {
  Series out(a.order());
  for (int i = 0; i <= a.order(); ++i) out.set_coeff(i, a.coeff(i) * c);
  return out;
}

Series pow(const Series& a, unsigned long long e) {
  Series result = Series::constant(Rat(1), a.order());
  Series base = a;
  while (e > 0) {
    if (e & 1ULL) result = mul(result, base);
    e >>= 1ULL;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Series geometric(int order) {
  Series s(order);
  for (int i = 0; i <= order; ++i) s.set_coeff(i, Rat(1));
  return s;
}

Series exp_series(const Series& a) {
  if (a.coeff(0) != 0)
    throw DomainError("exp_series requires a zero constant term");
  const int order = a.order();
  Series b(order);
  b.set_coeff(0, Rat(1));
  for (int n = 1; n <= order; ++n) {
    Rat acc = 0;
    for (int j = 1; j <= n; ++j) acc += Rat(j) * a.coeff(j) * b.coeff(n - j);
    b.set_coeff(n, acc / n);
  }
  return b;
}

Series log_inv_one_minus_x(int order) {
  Series s(order);
  for (int i = 1; i <= order; ++i) s.set_coeff(i, Rat(1, i));
  return s;
}

namespace {

// sum_{i>=s} x^i/i  (first-kind column base)
Series log_tail(unsigned s, int order) {
  Series t = log_inv_one_minus_x(order);
  for (unsigned i = 1; i < s && static_cast<int>(i) <= order; ++i)
    t.set_coeff(static_cast<int>(i), Rat(0));
  return t;
}

// sum_{i>=m} x^i/i!  (second-kind bases)
Series exp_tail(unsigned m, int order) {
  Series t = exp_series(Series::monomial(Rat(1), 1, order));
  for (unsigned i = 0; i < m && static_cast<int>(i) <= order; ++i)
    t.set_coeff(static_cast<int>(i), Rat(0));
  return t;
}

// per-free-class base and per-distinguished-class factor for each family
Series column_base(Kind kind, unsigned s, int order) {
  switch (kind) {
    case Kind::FirstKind:
      return log_tail(s, order);
    case Kind::SecondKind:
      return exp_tail(s, order);
    case Kind::Lah:
      return mul(Series::monomial(Rat(1), static_cast<int>(s), order),
                 geometric(order));
  }
  throw DomainError("unknown kind");
}

Series distinguished_factor(Kind kind, unsigned s, int order) {
  const Series xs1 = Series::monomial(Rat(1), static_cast<int>(s) - 1, order);
  switch (kind) {
    case Kind::FirstKind:
      return mul(xs1, geometric(order));
    case Kind::SecondKind:
      return exp_tail(s - 1, order);
    case Kind::Lah: {
      // x^(s-1) (s - (s-1)x) / (1-x)^2
      const Series linear =
          sub(Series::constant(Rat(s), order),
              Series::monomial(Rat(static_cast<long long>(s) - 1), 1, order));
      return mul(mul(xs1, linear), pow(geometric(order), 2));
    }
  }
  throw DomainError("unknown kind");
}

}  // namespace

Series egf_column(const Params& p, unsigned k, int order) {
  Series col = scale(pow(column_base(p.kind, p.s, order), k),
                     Rat(1) / rat_of(factorial(k)));
  if (p.r > 0) col = mul(col, pow(distinguished_factor(p.kind, p.s, order), p.r));
  return col;
}

Count coefficient_count(const Series& series, int n) {
  if (n < 0) throw DomainError("coefficient index must be >= 0");
  if (n > series.order())
    throw CapExceeded("coefficient index past the truncation order");
  return count_of(series.coeff(n) * rat_of(factorial(static_cast<unsigned>(n))));
}

Series double_egf_at(Kind kind, unsigned r, unsigned s, long long y, int order) {
  if (s == 0) throw DomainError("association order s must be >= 1");
  Series core = exp_series(scale(column_base(kind, s, order), Rat(y)));
  if (r > 0) core = mul(core, pow(distinguished_factor(kind, s, order), r));
  return core;
}

}  // namespace stirling

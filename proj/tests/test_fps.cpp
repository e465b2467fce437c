#include "stirling/fps.hpp"

#include "doctest.h"

#include <random>

using namespace stirling;

namespace {

Series random_series(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Series s(order);
  for (int i = 0; i <= order; ++i) s.set_coeff(i, Rat(num(rng), den(rng)));
  return s;
}

}  // namespace

TEST_SUITE("fps") {
  TEST_CASE("construction, constants and monomials") {
    CHECK_THROWS_AS(Series(-1), DomainError);
    const Series c = Series::constant(Rat(5), 3);
    CHECK(c.order() == 3);
    CHECK(c.coeff(0) == Rat(5));
    CHECK(c.coeff(3) == Rat(0));
    const Series m = Series::monomial(Rat(2, 3), 2, 4);
    CHECK(m.coeff(2) == Rat(2, 3));
    CHECK(m.coeff(1) == Rat(0));
  }

  TEST_CASE("the geometric series squares to the derivative pattern") {
    // 1/(1-x)^2 has coefficient n+1 at x^n
    const Series sq = pow(geometric(10), 2);
    for (int n = 0; n <= 10; ++n) CHECK(sq.coeff(n) == Rat(n + 1));
    CHECK(sq.coeff(7) == Rat(8));
  }

  TEST_CASE("binary operations truncate to the smaller order") {
    CHECK(mul(geometric(5), geometric(3)).order() == 3);
    CHECK(add(geometric(2), geometric(6)).order() == 2);
    CHECK(sub(geometric(4), geometric(4)).order() == 4);
    CHECK(pow(geometric(5), 0) == Series::constant(Rat(1), 5));
  }

  TEST_CASE("ring laws hold on random series") {
    std::mt19937 rng(77u);
    for (int trial = 0; trial < 25; ++trial) {
      const Series a = random_series(rng, 8);
      const Series b = random_series(rng, 8);
      const Series c = random_series(rng, 8);
      CHECK(mul(a, b) == mul(b, a));
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      CHECK(add(a, b) == add(b, a));
      CHECK(sub(add(a, b), b) == a);
      CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
      CHECK(scale(a, Rat(3, 2)) == mul(a, Series::constant(Rat(3, 2), 8)));
    }
  }

  TEST_CASE("exponential of a series") {
    // exp(x^2/(1-x)) carries 36/4! at x^4
    const Series arg = mul(Series::monomial(Rat(1), 2, 8), geometric(8));
    const Series e = exp_series(arg);
    CHECK(e.coeff(0) == Rat(1));
    CHECK(e.coeff(4) == Rat(3, 2));
    CHECK(coefficient_count(e, 4).str() == "36");
    CHECK_THROWS_AS(exp_series(Series::constant(Rat(1), 5)), DomainError);
  }

  TEST_CASE("logarithmic series for cycles") {
    const Series l = log_inv_one_minus_x(6);
    CHECK(l.coeff(0) == Rat(0));
    for (int i = 1; i <= 6; ++i) CHECK(l.coeff(i) == Rat(1, i));
    // exp(-ln(1-x)) = 1/(1-x)
    CHECK(exp_series(l) == geometric(6));
  }

  TEST_CASE("coefficient extraction guards its domain") {
    CHECK_THROWS_AS(coefficient_count(geometric(5), 6), CapExceeded);
    CHECK_THROWS_AS(coefficient_count(scale(geometric(5), Rat(1, 2)), 1),
                    IntegralityError);
    CHECK(coefficient_count(geometric(5), 3).str() == "6");  // 1 * 3!
  }

  TEST_CASE("column generating functions reproduce triangle columns") {
    // coefficient of x^n is T_r[n+r, k+r] / n!, k counting free classes
    const Series lah_col = egf_column(Params(Kind::Lah, 0, 3), 2, 10);
    CHECK(coefficient_count(lah_col, 6).str() == "360");

    const Series s1_pinned = egf_column(Params(Kind::FirstKind, 2, 2), 0, 6);
    CHECK(coefficient_count(s1_pinned, 2).str() == "2");

    const Series lah_pinned = egf_column(Params(Kind::Lah, 2, 2), 0, 6);
    CHECK(coefficient_count(lah_pinned, 2).str() == "8");

    const Series s2_col = egf_column(Params(Kind::SecondKind, 3, 2), 2, 8);
    CHECK(coefficient_count(s2_col, 7).str() == "630");

    TriangleStore store;
    for (Kind kind : {Kind::FirstKind, Kind::SecondKind, Kind::Lah}) {
      for (unsigned s = 1; s <= 2; ++s) {
        for (unsigned r = 0; r <= 2; ++r) {
          const Params p(kind, r, s);
          for (unsigned k = 0; k <= 3; ++k) {
            const Series col = egf_column(p, k, 10);
            for (int n = 0; n <= 10; ++n)
              CHECK(coefficient_count(col, n) ==
                    store.value(p, {n + static_cast<long long>(r),
                                    static_cast<long long>(k + r)}));
          }
        }
      }
    }
  }

  TEST_CASE("the double generating function specializes to column sums") {
    // second kind, r = 0, s = 1 at y = 1 gives the Bell numbers
    const Series bell = double_egf_at(Kind::SecondKind, 0, 1, 1, 8);
    CHECK(coefficient_count(bell, 5).str() == "52");
    CHECK(coefficient_count(bell, 8).str() == "4140");

    // Lah, r = 0, s = 2 at y = 1 sums the row: 24 + 12 at n = 4
    const Series lah_rows = double_egf_at(Kind::Lah, 0, 2, 1, 8);
    CHECK(coefficient_count(lah_rows, 4).str() == "36");

    // y = 2 weights column k by 2^k
    TriangleStore store;
    const Series weighted = double_egf_at(Kind::SecondKind, 1, 2, 2, 9);
    for (int n = 0; n <= 9; ++n) {
      Count expect(0ULL);
      unsigned long long weight = 1;
      for (long long k = 0; k <= n + 1; ++k) {
        expect += Count(weight) *
                  store.value(Params(Kind::SecondKind, 1, 2), {n + 1, k + 1});
        weight *= 2;
      }
      CHECK(coefficient_count(weighted, n) == expect);
    }
  }
}

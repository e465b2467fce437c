#include "stirling/identities.hpp"

#include "doctest.h"

#include <array>
#include <tuple>
#include <vector>

using namespace stirling;

namespace {

long long ll(unsigned v) { return static_cast<long long>(v); }

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("first-kind rank reduction") {
    TriangleStore store;
    const auto [lhs, rhs] = check_s1_reduction(store, 2, 2, 2, 6, 3);
    CHECK(lhs.str() == "12");
    CHECK(lhs == rhs);
    for (unsigned s = 1; s <= 3; ++s)
      for (unsigned r = 0; r <= 3; ++r)
        for (unsigned p = 0; p <= r; ++p)
          for (long long n = ll(r); n <= 9; ++n)
            for (long long k = ll(r); k <= 5; ++k) {
              const auto sides = check_s1_reduction(store, s, r, p, n, k);
              CHECK(sides.first == sides.second);
            }
    CHECK_THROWS_AS(check_s1_reduction(store, 2, 1, 2, 6, 3), DomainError);
  }

  TEST_CASE("second-kind rank reduction, binomial split") {
    TriangleStore store;
    const auto [lhs, rhs] = check_s2_reduction_binomial(store, 2, 2, 2, 8, 4);
    CHECK(lhs.str() == "90");
    CHECK(lhs == rhs);
    for (unsigned s = 1; s <= 3; ++s)
      for (unsigned r = 0; r <= 3; ++r)
        for (unsigned p = 0; p <= r; ++p)
          for (long long n = ll(r); n <= 9; ++n)
            for (long long k = ll(r); k <= 5; ++k) {
              const auto sides = check_s2_reduction_binomial(store, s, r, p, n, k);
              CHECK(sides.first == sides.second);
            }
    CHECK_THROWS_AS(check_s2_reduction_binomial(store, 2, 1, 2, 6, 3), DomainError);
  }

  TEST_CASE("second-kind rank reduction, occupancy split") {
    TriangleStore store;
    for (unsigned s = 1; s <= 3; ++s)
      for (unsigned r = 0; r <= 3; ++r)
        for (unsigned p = 0; p <= r; ++p)
          for (long long n = ll(r); n <= 9; ++n)
            for (long long k = ll(r); k <= 5; ++k) {
              const auto sides = check_s2_reduction_occupancy(store, s, r, p, n, k);
              CHECK(sides.first == sides.second);
            }
    // the very point where the power fan-out first overcounts
    const auto fixed = check_s2_reduction_occupancy(store, 2, 1, 1, 3, 1);
    CHECK(fixed.first.str() == "1");
    CHECK(fixed.first == fixed.second);
  }

  TEST_CASE("second-kind power fan-out is exact at s == 1 and overcounts past it") {
    TriangleStore store;
    for (unsigned r = 0; r <= 3; ++r)
      for (unsigned p = 0; p <= r; ++p)
        for (long long n = ll(r); n <= 9; ++n)
          for (long long k = ll(r); k <= 5; ++k) {
            const auto sides = check_s2_reduction_powers(store, 1, r, p, n, k);
            CHECK(sides.first == sides.second);
          }

    const auto over = check_s2_reduction_powers(store, 2, 1, 1, 3, 1);
    CHECK(over.first.str() == "1");
    CHECK(over.second.str() == "2");

    // slack-free corners where the fan-out degenerates to a single term
    const auto corner1 = check_s2_reduction_powers(store, 2, 2, 2, 6, 3);
    CHECK(corner1.first.str() == "12");
    CHECK(corner1.first == corner1.second);
    const auto corner2 = check_s2_reduction_powers(store, 2, 2, 1, 8, 4);
    CHECK(corner2.first.str() == "90");
    CHECK(corner2.first == corner2.second);
  }

  TEST_CASE("Lah rank reduction") {
    TriangleStore store;
    const auto [lhs, rhs] = check_lah_reduction(store, 2, 2, 2, 6, 3);
    CHECK(lhs.str() == "96");
    CHECK(lhs == rhs);
    for (unsigned s = 1; s <= 3; ++s)
      for (unsigned r = 0; r <= 3; ++r)
        for (unsigned p = 0; p <= r; ++p)
          for (long long n = ll(r); n <= 9; ++n)
            for (long long k = ll(r); k <= 5; ++k) {
              const auto sides = check_lah_reduction(store, s, r, p, n, k);
              CHECK(sides.first == sides.second);
            }
    CHECK_THROWS_AS(check_lah_reduction(store, 2, 0, 1, 6, 3), DomainError);
  }

  TEST_CASE("cross recurrences tie consecutive pinned levels together") {
    TriangleStore store;
    const auto at = check_cross_recurrences(store, 2, 2, 5, 2);
    REQUIRE(at.size() == 3);
    CHECK(std::get<0>(at[0]) == "first-kind-cross");
    CHECK(std::get<1>(at[0]).str() == "12");
    CHECK(std::get<0>(at[1]) == "second-kind-cross");
    CHECK(std::get<1>(at[1]).str() == "6");
    CHECK(std::get<0>(at[2]) == "lah-cross");
    CHECK(std::get<1>(at[2]).str() == "72");
    for (const auto& [name, lhs, rhs] : at) {
      CHECK(lhs == rhs);
    }

    for (unsigned s = 1; s <= 3; ++s)
      for (unsigned r = 1; r <= 3; ++r)
        for (long long n = ll(r); n <= 9; ++n)
          for (long long k = ll(r); k <= 5; ++k)
            for (const auto& [name, lhs, rhs] :
                 check_cross_recurrences(store, s, r, n, k)) {
              CHECK(lhs == rhs);
            }
    CHECK_THROWS_AS(check_cross_recurrences(store, 2, 0, 5, 2), DomainError);
  }

  TEST_CASE("multinomial convolution splits one triangle across a composition") {
    TriangleStore store;
    const std::array<long long, 2> ks{1, 1};
    const std::array<long long, 2> rs{1, 1};
    const auto lah = check_convolution(store, Kind::Lah, 2, ks, rs, 6);
    CHECK(lah.first.str() == "2880");
    CHECK(lah.first == lah.second);
    const auto s2 = check_convolution(store, Kind::SecondKind, 2, ks, rs, 6);
    CHECK(s2.first.str() == "180");
    CHECK(s2.first == s2.second);

    for (Kind kind : {Kind::FirstKind, Kind::SecondKind, Kind::Lah})
      for (unsigned s = 1; s <= 2; ++s)
        for (long long k1 = 0; k1 <= 2; ++k1)
          for (long long k2 = 0; k2 <= 2; ++k2)
            for (long long r1 = 0; r1 <= 1; ++r1)
              for (long long r2 = 0; r2 <= 1; ++r2)
                for (long long n = 0; n <= 8; ++n) {
                  const std::array<long long, 2> kk{k1, k2};
                  const std::array<long long, 2> rr{r1, r2};
                  const auto sides = check_convolution(store, kind, s, kk, rr, n);
                  CHECK(sides.first == sides.second);
                }

    // a three-way split
    const std::array<long long, 3> k3{1, 1, 0};
    const std::array<long long, 3> r3{1, 0, 1};
    for (Kind kind : {Kind::FirstKind, Kind::SecondKind, Kind::Lah}) {
      const auto sides = check_convolution(store, kind, 2, k3, r3, 7);
      CHECK(sides.first == sides.second);
    }

    const std::array<long long, 2> short_rs{1, 0};
    const std::array<long long, 3> long_ks{1, 1, 1};
    CHECK_THROWS_AS(check_convolution(store, Kind::Lah, 2, long_ks, short_rs, 5),
                    DomainError);
  }

  TEST_CASE("the two closed forms of the prefix-shifted product sum agree") {
    const auto at = check_shifted_product_closed_forms(2, 2, 4, 2);
    CHECK(at.first.str() == "70");
    CHECK(at.first == at.second);
    for (unsigned s = 1; s <= 3; ++s)
      for (unsigned r = 0; r <= 3; ++r)
        for (long long k = ll(r); k <= 5; ++k)
          for (long long n = 0; n <= 9; ++n) {
            const auto sides =
                check_shifted_product_closed_forms(s, r, n, k);
            CHECK(sides.first == sides.second);
          }
  }
}

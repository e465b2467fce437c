#include "stirling/closedform.hpp"

#include "doctest.h"

#include "stirling/compositions.hpp"

#include <vector>

using namespace stirling;

TEST_SUITE("closedform") {
  TEST_CASE("associated Lah numbers in closed form") {
    CHECK(lah_explicit(3, 9, 3).str() == "60480");
    CHECK(lah_explicit(2, 4, 2).str() == "12");
    CHECK(lah_explicit(1, 4, 2).str() == "36");
    // minimal rows n = 2k at s = 2 collapse to (2k)!/k!
    for (long long k = 0; k <= 6; ++k) {
      CHECK(lah_explicit(2, 2 * k, k) ==
            count_of(rat_of(factorial(static_cast<unsigned long long>(2 * k))) /
                     rat_of(factorial(static_cast<unsigned long long>(k)))));
    }
    CHECK(lah_explicit(2, 0, 0).str() == "1");
    CHECK(lah_explicit(2, 3, 0).is_zero());
    CHECK_THROWS_AS(lah_explicit(2, 3, 2), DomainError);
  }

  TEST_CASE("first kind with distinguished elements, double composition sum") {
    CHECK(s1_explicit(2, 2, 6, 3).str() == "12");
    CHECK(s1_explicit(2, 3, 8, 3).str() == "720");
    CHECK(s1_explicit(3, 0, 6, 2).str() == "40");
    TriangleStore store;
    for (unsigned s = 1; s <= 3; ++s)
      for (unsigned r = 0; r <= 3; ++r)
        for (long long n = r; n <= 9; ++n)
          for (long long k = r; k * static_cast<long long>(s) <= n; ++k)
            CHECK(s1_explicit(s, r, n, k) ==
                  store.value(Params(Kind::FirstKind, r, s), {n, k}));
  }

  TEST_CASE("second kind with distinguished elements, factorial-weight sum") {
    CHECK(s2_explicit(3, 2, 9, 3).str() == "210");
    CHECK(s2_explicit(2, 2, 8, 4).str() == "90");
    TriangleStore store;
    for (unsigned s = 1; s <= 3; ++s)
      for (unsigned r = 0; r <= 3; ++r)
        for (long long n = r; n <= 9; ++n)
          for (long long k = r; k * static_cast<long long>(s) <= n; ++k)
            CHECK(s2_explicit(s, r, n, k) ==
                  store.value(Params(Kind::SecondKind, r, s), {n, k}));
  }

  TEST_CASE("Lah with distinguished elements: three routes, one value") {
    CHECK(lah_r_explicit(2, 2, 4, 2).str() == "8");
    CHECK(lah_r_explicit(3, 2, 9, 3).str() == "45360");
    CHECK(lah_r_explicit_dual(3, 2, 9, 3).str() == "45360");
    CHECK(lah_r_composition_sum(3, 2, 9, 3).str() == "45360");
    TriangleStore store;
    for (unsigned s = 1; s <= 3; ++s)
      for (unsigned r = 0; r <= 3; ++r)
        for (long long n = r; n <= 9; ++n)
          for (long long k = r; k * static_cast<long long>(s) <= n; ++k) {
            const Count engine = store.value(Params(Kind::Lah, r, s), {n, k});
            CHECK(lah_r_explicit(s, r, n, k) == engine);
            CHECK(lah_r_explicit_dual(s, r, n, k) == engine);
            CHECK(lah_r_composition_sum(s, r, n, k) == engine);
          }
  }

  TEST_CASE("Vandermonde-style expansion inside its validity range") {
    CHECK(lah_vandermonde(3, 9, 3, 1).str() == "60480");
    for (unsigned s = 1; s <= 3; ++s)
      for (long long n = 0; n <= 10; ++n)
        for (long long k = 1; k * static_cast<long long>(s) <= n; ++k) {
          // p may reach n-(s-1)k-1 always, and n-(s-1)k on minimal rows
          long long p_top = n - static_cast<long long>(s - 1) * k - 1;
          if (n == static_cast<long long>(s) * k) p_top += 1;
          for (long long p = 0; p <= p_top; ++p)
            CHECK(lah_vandermonde(s, n, k, p) == lah_explicit(s, n, k));
        }
  }

  TEST_CASE("vertical recurrence peels the block of the last element") {
    CHECK(lah_vertical(2, 4, 2).str() == "12");
    TriangleStore store;
    for (unsigned s = 1; s <= 3; ++s)
      for (long long n = 0; n <= 11; ++n)
        for (long long k = 1; k * static_cast<long long>(s) <= n; ++k)
          CHECK(lah_vertical(s, n, k) ==
                store.value(Params(Kind::Lah, 0, s), {n, k}));
  }

  TEST_CASE("rational column relation holds on the engine's values") {
    TriangleStore store;
    for (unsigned s = 1; s <= 3; ++s)
      for (long long n = 1; n <= 11; ++n)
        for (long long k = 1; k * static_cast<long long>(s) <= n; ++k)
          CHECK(lah_rational_recurrence_check(store, s, n, k));
    CHECK_THROWS_AS(lah_rational_recurrence_check(store, 2, 3, 2), DomainError);
  }

  TEST_CASE("diagonal closed forms at k == r") {
    CHECK(diagonal_value(Kind::FirstKind, 2, 2, 4).str() == "2");
    CHECK(diagonal_value(Kind::SecondKind, 2, 3, 6).str() == "6");
    CHECK(diagonal_value(Kind::Lah, 3, 2, 6).str() == "216");
    CHECK(diagonal_value(Kind::Lah, 3, 3, 9).str() == "19440");
    TriangleStore store;
    for (Kind kind : {Kind::FirstKind, Kind::SecondKind, Kind::Lah})
      for (unsigned s = 1; s <= 3; ++s)
        for (unsigned r = 0; r <= 3; ++r)
          for (long long n = static_cast<long long>(s) * r; n <= 10; ++n)
            CHECK(diagonal_value(kind, s, r, n) ==
                  store.value(Params(kind, r, s), {n, static_cast<long long>(r)}));
  }

  TEST_CASE("composition iteration matches the counting formula") {
    for (long long total = 0; total <= 9; ++total) {
      for (unsigned parts = 0; parts <= 4; ++parts) {
        unsigned long long seen = 0;
        for (const auto& comp : CompositionRange(total, parts)) {
          long long sum = 0;
          for (long long part : comp) sum += part;
          CHECK(sum == total);
          CHECK(comp.size() == parts);
          ++seen;
        }
        CHECK(Count(seen) == composition_count(total, parts));
      }
    }
  }

  TEST_CASE("compositions honor a per-part minimum") {
    std::vector<std::vector<long long>> got;
    for (const auto& comp : CompositionRange(5, 2, 2)) got.push_back(comp);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == std::vector<long long>{3, 2});
    CHECK(got[1] == std::vector<long long>{2, 3});

    // zero parts: total 0 has the single empty composition, others none
    unsigned long long empties = 0;
    for (const auto& comp : CompositionRange(0, 0)) {
      CHECK(comp.empty());
      ++empties;
    }
    CHECK(empties == 1);
    for ([[maybe_unused]] const auto& comp : CompositionRange(3, 0)) CHECK(false);
    for ([[maybe_unused]] const auto& comp : CompositionRange(-2, 2)) CHECK(false);
    CHECK(composition_count(0, 0).str() == "1");
    CHECK(composition_count(3, 0).is_zero());
    CHECK(composition_count(-1, 2).is_zero());
  }
}

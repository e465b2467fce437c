#include "stirling/triangles.hpp"

#include "doctest.h"

#include <optional>
#include <thread>
#include <tuple>
#include <vector>

using namespace stirling;

namespace {

const Kind kAllKinds[] = {Kind::FirstKind, Kind::SecondKind, Kind::Lah};

}  // namespace

TEST_SUITE("triangles") {
  TEST_CASE("anchor values across the three families") {
    TriangleStore store;
    CHECK(store.value(Params(Kind::FirstKind, 2, 2), {4, 2}).str() == "2");
    CHECK(store.value(Params(Kind::FirstKind, 2, 2), {6, 3}).str() == "12");
    CHECK(store.value(Params(Kind::SecondKind, 2, 2), {8, 4}).str() == "90");
    CHECK(store.value(Params(Kind::SecondKind, 2, 3), {9, 3}).str() == "210");
    CHECK(store.value(Params(Kind::Lah, 2, 2), {5, 2}).str() == "72");
    CHECK(store.value(Params(Kind::Lah, 2, 2), {8, 4}).str() == "1440");
    CHECK(store.value(Params(Kind::Lah, 0, 3), {6, 2}).str() == "360");
    CHECK(store.value(Params(Kind::Lah, 3, 3), {9, 3}).str() == "19440");
  }

  TEST_CASE("out-of-domain cells are zero; n == r pins the value one") {
    TriangleStore store;
    for (Kind kind : kAllKinds) {
      CHECK(store.value(Params(kind, 0, 1), {-1, 0}).is_zero());
      CHECK(store.value(Params(kind, 0, 1), {3, -1}).is_zero());
      CHECK(store.value(Params(kind, 3, 1), {5, 2}).is_zero());  // k < r
      CHECK(store.value(Params(kind, 0, 2), {5, 3}).is_zero());  // n < s*k
      CHECK(store.value(Params(kind, 2, 1), {2, 2}).str() == "1");
      CHECK(store.value(Params(kind, 0, 5), {0, 0}).str() == "1");
      // n == r but n < s*k: the domain guard wins
      CHECK(store.value(Params(kind, 3, 2), {3, 3}).is_zero());
    }
  }

  TEST_CASE("the association order s must be at least one") {
    CHECK_THROWS_AS(Params(Kind::Lah, 0, 0), DomainError);
  }

  TEST_CASE("rows list exactly the nonzero cells, k ascending") {
    TriangleStore store;

    const auto lah_row = store.row(Params(Kind::Lah, 2, 2), 6);
    REQUIRE(lah_row.size() == 2);
    CHECK(lah_row[0].first == 2);
    CHECK(lah_row[0].second.str() == "600");
    CHECK(lah_row[1].first == 3);
    CHECK(lah_row[1].second.str() == "96");

    const auto s1_row = store.row(Params(Kind::FirstKind, 3, 2), 8);
    REQUIRE(s1_row.size() == 2);
    CHECK(s1_row[0].first == 3);
    CHECK(s1_row[0].second.str() == "720");
    CHECK(s1_row[1].first == 4);
    CHECK(s1_row[1].second.str() == "60");

    const auto origin = store.row(Params(Kind::Lah, 0, 3), 0);
    REQUIRE(origin.size() == 1);
    CHECK(origin[0].first == 0);
    CHECK(origin[0].second.str() == "1");

    // row sums of the classical first kind count all permutations
    Count sum(0ULL);
    for (const auto& [k, v] : store.row(Params(Kind::FirstKind, 0, 1), 5)) {
      CHECK(k >= 1);
      CHECK(k <= 5);
      sum += v;
    }
    CHECK(sum.str() == "120");
  }

  TEST_CASE("classical single-parameter triangles") {
    TriangleStore store;
    CHECK(store.classical_value(Kind::SecondKind, 4, 2).str() == "7");
    CHECK(store.classical_value(Kind::FirstKind, 4, 2).str() == "11");
    CHECK(store.classical_value(Kind::Lah, 4, 2).str() == "36");
    for (long long n = 0; n <= 8; ++n) {
      CHECK(store.classical_value(Kind::FirstKind, n, n).str() == "1");
      CHECK(store.classical_value(Kind::SecondKind, n, n).str() == "1");
      CHECK(store.classical_value(Kind::Lah, n, n).str() == "1");
    }
    // Bell number B(5) = 52 as a second-kind row sum
    Count bell(0ULL);
    for (long long k = 0; k <= 5; ++k) bell += store.classical_value(Kind::SecondKind, 5, k);
    CHECK(bell.str() == "52");
  }

  TEST_CASE("direct Lah column recurrence agrees with the engine") {
    TriangleStore store;
    for (unsigned s = 1; s <= 3; ++s) {
      const Params p(Kind::Lah, 0, s);
      for (long long n = 0; n <= 12; ++n)
        for (long long k = 0; k <= n; ++k)
          CHECK(lah_recurrence_direct(s, n, k) == store.value(p, {n, k}));
    }
  }

  TEST_CASE("memo cap bounds the store without changing any value") {
    TriangleStore capped{std::optional<std::size_t>{8}};
    TriangleStore full;
    const Params p(Kind::SecondKind, 1, 2);
    for (long long n = 0; n <= 10; ++n)
      for (long long k = 0; k <= n; ++k)
        CHECK(capped.value(p, {n, k}) == full.value(p, {n, k}));
    CHECK(capped.memo_size() <= 8);
    CHECK(full.memo_size() > 8);
  }

  TEST_CASE("concurrent queries agree with a single-threaded baseline") {
    TriangleStore shared;
    TriangleStore baseline;
    struct Job {
      Kind kind;
      unsigned r;
      unsigned s;
    };
    const std::vector<Job> jobs = {
        {Kind::FirstKind, 0, 1}, {Kind::FirstKind, 2, 2}, {Kind::SecondKind, 1, 2},
        {Kind::SecondKind, 3, 3}, {Kind::Lah, 0, 2},      {Kind::Lah, 2, 3},
        {Kind::FirstKind, 2, 2}, {Kind::Lah, 0, 2},  // deliberate overlap
    };
    std::vector<std::vector<Count>> got(jobs.size());
    {
      std::vector<std::thread> pool;
      for (std::size_t j = 0; j < jobs.size(); ++j) {
        pool.emplace_back([&, j] {
          const Params p(jobs[j].kind, jobs[j].r, jobs[j].s);
          for (long long n = 0; n <= 12; ++n)
            for (long long k = 0; k <= 6; ++k)
              got[j].push_back(shared.value(p, {n, k}));
        });
      }
      for (auto& t : pool) t.join();
    }
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      const Params p(jobs[j].kind, jobs[j].r, jobs[j].s);
      std::size_t i = 0;
      for (long long n = 0; n <= 12; ++n)
        for (long long k = 0; k <= 6; ++k)
          CHECK(got[j][i++] == baseline.value(p, {n, k}));
    }
  }
}

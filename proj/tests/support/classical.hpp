#pragma once

// Self-contained dynamic programs for the three classical triangles
// (unsigned Stirling numbers of the first kind, Stirling numbers of the
// second kind, Lah numbers), written directly from their textbook two-term
// recurrences:
//
//   first kind   T[n][k] = T[n-1][k-1] + (n-1) * T[n-1][k]
//   second kind  T[n][k] = T[n-1][k-1] +   k   * T[n-1][k]
//   Lah          T[n][k] = T[n-1][k-1] + (n+k-1) * T[n-1][k]
//
// with T[0][0] = 1. The acceptance checks diff the library's general engine
// at r = 0, s = 1 against these tables, so this header deliberately shares
// nothing with the engine beyond big-integer arithmetic.

#include "stirling/exactnum.hpp"
#include "stirling/triangles.hpp"

#include <vector>

namespace classical {

inline std::vector<std::vector<stirling::Count>> build(stirling::Kind kind,
                                                       int n_max) {
  using stirling::Count;
  std::vector<std::vector<Count>> t(static_cast<std::size_t>(n_max) + 1);
  t[0].assign(1, Count(1ULL));
  for (int n = 1; n <= n_max; ++n) {
    t[n].assign(static_cast<std::size_t>(n) + 1, Count(0ULL));
    for (int k = 0; k <= n; ++k) {
      Count v = (k > 0) ? t[n - 1][k - 1] : Count(0ULL);
      if (k <= n - 1) {
        unsigned long long w = 0;
        switch (kind) {
          case stirling::Kind::FirstKind:
            w = static_cast<unsigned long long>(n - 1);
            break;
          case stirling::Kind::SecondKind:
            w = static_cast<unsigned long long>(k);
            break;
          case stirling::Kind::Lah:
            w = static_cast<unsigned long long>(n + k - 1);
            break;
        }
        v += Count(w) * t[n - 1][k];
      }
      t[n][k] = v;
    }
  }
  return t;
}

}  // namespace classical

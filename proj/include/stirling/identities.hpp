#pragma once

// Cross-family and rank-reduction identities. Every checker evaluates both
// sides independently (left through the triangle engine, right through the
// stated summation) and returns the pair, so callers diff rather than trust.

#include "stirling/exactnum.hpp"
#include "stirling/triangles.hpp"

#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace stirling {

struct IdentityReport {
  struct Failure {
    std::vector<long long> point;
    Count lhs;
    Count rhs;
  };

  std::string identity_name;
  std::vector<std::vector<long long>> grid;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

using SidePair = std::pair<Count, Count>;

// First kind, r -> r-p: distribute i extra elements over the p removed
// cycles (compositions with parts >= s-1), falling-factorial many ways to
// pick and order them.
SidePair check_s1_reduction(const TriangleStore& store, unsigned s, unsigned r,
                            unsigned p, long long n, long long k);

// Second kind, r -> r-p, split by how many of the remaining elements stay
// outside the p removed blocks; the leftovers fan out with powers of p.
// Correct for s = 1 (and trivially p = 0), but for s >= 2 the power
// fan-out overcounts whenever a removed block exceeds the minimum size
// (the split into "first s-1 companions" and "leftovers" is not unique):
// e.g. s=2, r=p=1, n=3, k=1 gives 2 against the true value 1. Kept
// verbatim so the overcount itself can be measured.
SidePair check_s2_reduction_powers(const TriangleStore& store, unsigned s,
                                   unsigned r, unsigned p, long long n, long long k);

// The corrected form of the same split: the leftovers fill the p removed
// blocks by labeled occupancy with every block at least s-1 deep, which
// collapses to the power fan-out exactly when s = 1.
SidePair check_s2_reduction_occupancy(const TriangleStore& store, unsigned s,
                                      unsigned r, unsigned p, long long n,
                                      long long k);

// Second kind, r -> r-p, split by how many removed blocks sit at exactly
// the minimum size s (binomial/multinomial weights, no power fan-out).
SidePair check_s2_reduction_binomial(const TriangleStore& store, unsigned s,
                                     unsigned r, unsigned p, long long n,
                                     long long k);

// Lah, r -> r-p: slide sp elements plus j units of slack out of the first
// p lists; the slack redistributes with shifted product weights.
SidePair check_lah_reduction(const TriangleStore& store, unsigned s, unsigned r,
                             unsigned p, long long n, long long k);

// r -> r-1 recurrences tying consecutive r-levels of one family together;
// returns one named (lhs, rhs) tuple per family.
std::vector<std::tuple<std::string, Count, Count>> check_cross_recurrences(
    const TriangleStore& store, unsigned s, unsigned r, long long n, long long k);

// Multinomial convolution splitting (k, r) into parts across a composition
// of n: C(k; k_i) T_r[n+r, k+r] = sum multinomial(n; l_i) prod T_{r_i}[...].
SidePair check_convolution(const TriangleStore& store, Kind kind, unsigned s,
                           std::span<const long long> ks,
                           std::span<const long long> rs, long long n);

// The two closed forms of the shifted product sum
// sum_{comps of n into k} prod_{j<=r} (i_j+s); lhs uses (s-1) powers, rhs
// uses s powers against the complementary binomial.
SidePair check_shifted_product_closed_forms(unsigned s, unsigned r, long long n,
                                            long long k);

}  // namespace stirling

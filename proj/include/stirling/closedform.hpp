#pragma once

// Closed-form evaluations: single/double sums over binomials, factorials
// and compositions that produce the same numbers as the triangular
// recurrences through entirely different arithmetic. Intermediate values
// live in exact rationals wherever a formula divides; a non-integral final
// value throws IntegralityError since it can only mean an implementation
// bug.

#include "stirling/compositions.hpp"
#include "stirling/exactnum.hpp"
#include "stirling/triangles.hpp"

namespace stirling {

// Associated Lah numbers, no distinguished elements:
//   L^(s)[n,k] = (n!/k!) * C(n-(s-1)k-1, k-1).
// Throws DomainError if n < s*k; k == 0 yields [n == 0].
Count lah_explicit(unsigned s, long long n, long long k);

// True iff the triangle-engine values satisfy the rational column relation
//   L[n,k] = (n!/((n-s)! k)) * L[n-s,k-1] + n * L[n-1,k].
bool lah_rational_recurrence_check(const TriangleStore& store, unsigned s,
                                   long long n, long long k);

// Vandermonde-style expansion sliding p elements out of the explicit form:
//   sum = (n!/k!) * sum_i (k-i)!/(n-p-(s-1)i)! C(p,i) L[n-(s-1)i-p, k-i],
// referenced cells evaluated by lah_explicit. Requires 0 <= p <= n-sk+k so
// every referenced cell is defined or zero. The sum equals L^(s)[n,k] for
// p <= n-(s-1)k-1, and also at p = n-(s-1)k when n = sk; at p = n-(s-1)k
// with n > sk the i = k term references cell (0,0), which the binomial
// convolution behind the identity treats as empty, and the sum overshoots.
Count lah_vandermonde(unsigned s, long long n, long long k, long long p);

// Vertical recurrence peeling off the block containing the last element:
//   L[n,k] = sum_{i=s(k-1)}^{n-s} (n-i)! C(n-1,i) L[i,k-1].
Count lah_vertical(unsigned s, long long n, long long k);

// First kind with r distinguished elements: outer sum over the mass m given
// to the r distinguished cycles, inner sum over compositions of the rest
// into the k-r free cycles, each part weighted 1/(i+s):
//   ((n-r)!/(k-r)!) * sum_m comp(m into r) * sum_{comps} prod 1/(i_j+s).
Count s1_explicit(unsigned s, unsigned r, long long n, long long k);

// Second kind with r distinguished elements: one sum over compositions of
// n-sk into k parts with factorial weights, distinguished blocks first:
//   ((n-r)!/(k-r)!) * sum prod_{j<=r} 1/(i_j+s-1)! prod_{j>r} 1/(i_j+s)!.
Count s2_explicit(unsigned s, unsigned r, long long n, long long k);

// Lah with r distinguished elements, binomial single sum with s powers:
//   ((n-r)!/(k-r)!) * sum_j C(r,j) C(n-(s-1)k-1, k+j-1) s^(r-j).
Count lah_r_explicit(unsigned s, unsigned r, long long n, long long k);

// Same value through the dual expansion with (s-1) powers:
//   ((n-r)!/(k-r)!) * sum_j C(r,j) C(n+j-(s-1)k-1, k+j-1) (s-1)^(r-j).
Count lah_r_explicit_dual(unsigned s, unsigned r, long long n, long long k);

// Same value as a composition sum, the r distinguished parts carrying the
// product weight (i_1+s)...(i_r+s):
//   ((n-r)!/(k-r)!) * sum_{comps of n-sk into k} prod_{j<=r} (i_j+s).
Count lah_r_composition_sum(unsigned s, unsigned r, long long n, long long k);

// The k == r diagonal in closed form, one formula per family.
Count diagonal_value(Kind kind, unsigned s, unsigned r, long long n);

}  // namespace stirling

#pragma once

// Memoized triangular recurrences for the three families of s-associated
// r-Stirling numbers: cycles (first kind), subsets (second kind), and
// ordered lists (Lah). T_r[n,k] counts placements of {1..n} into k
// nonempty classes, each of size >= s, with elements 1..r in distinct
// classes.
//
// One recurrence shape covers all three families, classified by what the
// newest element can do:
//   T_r[n,k] = C(n-r-1, s-1) * w * T_r[n-s, k-1]
//            + r * C(n-r-1, s-2) * w * T_{r-1}[n-s, k-1]
//            + tail(n,k) * T_r[n-1, k]
// where (w, tail) is ((s-1)!, n-1) for cycles, (1, k) for subsets and
// (s!, n+k-1) for lists.
//
// Boundary: cells with k < 0, n < 0, k < r or n < s*k are 0; an in-domain
// cell with n == r evaluates to 1 (that forces k == r with s == 1, or
// n = k = r = 0, and a single arrangement exists in either case).

#include "stirling/exactnum.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace stirling {

enum class Kind { FirstKind, SecondKind, Lah };

struct Params {
  Kind kind;
  unsigned r;
  unsigned s;

  Params(Kind kind_, unsigned r_, unsigned s_) : kind(kind_), r(r_), s(s_) {
    if (s == 0) throw DomainError("association order s must be >= 1");
  }
};

struct Cell {
  long long n;
  long long k;
};

// Shared write-once memo over (kind, s, r, n, k). value() is logically
// pure; concurrent callers may duplicate work but the first stored result
// wins and all computed values for a key are identical. An optional cap
// bounds the store; past it, evaluations fall back to a per-call scratch
// memo so lookups degrade gracefully instead of turning exponential.
class TriangleStore {
 public:
  TriangleStore() = default;
  explicit TriangleStore(std::optional<std::size_t> cache_cap) : cap_(cache_cap) {}

  Count value(const Params& p, Cell c) const;

  // Nonzero cells of row n, as (k, value) pairs with k ascending over
  // [r .. floor(n/s)] (k from 0 when r == 0; only n == 0 makes k == 0 live).
  std::vector<std::pair<long long, Count>> row(const Params& p, long long n) const;

  // Classical single-parameter triangles: r = 0, s = 1.
  Count classical_value(Kind kind, long long n, long long k) const;

  std::size_t memo_size() const;

 private:
  using Key = std::tuple<int, unsigned, unsigned, long long, long long>;
  using Memo = std::map<Key, Count>;

  Count eval(Kind kind, unsigned r, unsigned s, long long n, long long k,
             Memo& scratch) const;

  mutable Memo memo_;
  mutable std::mutex mutex_;
  std::optional<std::size_t> cap_;
};

// The Lah column recurrence implemented directly with its own local table,
// kept separate from TriangleStore so the two paths can be diffed:
//   L[n,k] = C(n-1, s-1) * s! * L[n-s, k-1] + (n+k-1) * L[n-1, k].
Count lah_recurrence_direct(unsigned s, long long n, long long k);

}  // namespace stirling

#include "stirling/triangles.hpp"

namespace stirling {

namespace {

Count unit_weight(Kind kind, unsigned s) {
  switch (kind) {
    case Kind::FirstKind:
      return factorial(s - 1);  // a new class of size s, arranged in a cycle
    case Kind::SecondKind:
      return Count(1ULL);
    case Kind::Lah:
      return factorial(s);  // arranged in a list
  }
  return Count(0ULL);
}

Count tail_coefficient(Kind kind, long long n, long long k) {
  // ways to absorb element n into an existing class of size >= s
  switch (kind) {
    case Kind::FirstKind:
      return Count(static_cast<unsigned long long>(n - 1));
    case Kind::SecondKind:
      return Count(static_cast<unsigned long long>(k));
    case Kind::Lah:
      return Count(static_cast<unsigned long long>(n + k - 1));
  }
  return Count(0ULL);
}

}  // namespace

Count TriangleStore::value(const Params& p, Cell c) const {
  Memo scratch;
  return eval(p.kind, p.r, p.s, c.n, c.k, scratch);
}

Count TriangleStore::eval(Kind kind, unsigned r, unsigned s, long long n, long long k,
                          Memo& scratch) const {
  if (k < 0 || n < 0) return Count(0ULL);
  if (k < static_cast<long long>(r)) return Count(0ULL);
  if (n < static_cast<long long>(s) * k) return Count(0ULL);
  // in-domain n == r forces k == r with s == 1, or n = k = r = 0
  if (n == static_cast<long long>(r)) return Count(1ULL);

  const Key key{static_cast<int>(kind), s, r, n, k};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  if (auto it = scratch.find(key); it != scratch.end()) return it->second;

  const long long m = n - static_cast<long long>(r) - 1;
  const Count w = unit_weight(kind, s);

  Count v = binomial(m, static_cast<long long>(s) - 1) * w *
            eval(kind, r, s, n - s, k - 1, scratch);
  if (r > 0) {
    v += Count(static_cast<unsigned long long>(r)) *
         binomial(m, static_cast<long long>(s) - 2) * w *
         eval(kind, r - 1, s, n - s, k - 1, scratch);
  }
  v += tail_coefficient(kind, n, k) * eval(kind, r, s, n - 1, k, scratch);

  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!cap_ || memo_.size() < *cap_) {
      memo_.emplace(key, v);  // first writer wins
      return v;
    }
  }
  scratch.emplace(key, v);
  return v;
}

std::vector<std::pair<long long, Count>> TriangleStore::row(const Params& p,
                                                            long long n) const {
  std::vector<std::pair<long long, Count>> out;
  if (n < 0) return out;
  for (long long k = p.r; k * static_cast<long long>(p.s) <= n; ++k) {
    Count v = value(p, {n, k});
    if (!v.is_zero()) out.emplace_back(k, std::move(v));
  }
  return out;
}

Count TriangleStore::classical_value(Kind kind, long long n, long long k) const {
  return value(Params(kind, 0, 1), {n, k});
}

std::size_t TriangleStore::memo_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

Count lah_recurrence_direct(unsigned s, long long n, long long k) {
  if (s == 0) throw DomainError("association order s must be >= 1");
  if (k < 0 || n < 0 || n < static_cast<long long>(s) * k) return Count(0ULL);
  if (k == 0) return Count(n == 0 ? 1ULL : 0ULL);

  const std::size_t rows = static_cast<std::size_t>(n) + 1;
  const std::size_t cols = static_cast<std::size_t>(k) + 1;
  std::vector<std::vector<Count>> table(rows, std::vector<Count>(cols, Count(0ULL)));
  table[0][0] = Count(1ULL);
  const Count sfact = factorial(s);
  for (long long nn = 1; nn <= n; ++nn) {
    for (long long kk = 1; kk <= k && static_cast<long long>(s) * kk <= nn; ++kk) {
      Count v(0ULL);
      if (nn >= static_cast<long long>(s)) {
        v += binomial(nn - 1, static_cast<long long>(s) - 1) * sfact *
             table[nn - s][kk - 1];
      }
      v += Count(static_cast<unsigned long long>(nn + kk - 1)) * table[nn - 1][kk];
      table[nn][kk] = std::move(v);
    }
  }
  return table[n][k];
}

}  // namespace stirling

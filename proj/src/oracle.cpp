#include "stirling/oracle.hpp"

#include <algorithm>
#include <functional>

namespace stirling {

namespace {

unsigned cap_for(Shape shape, const EnumerationCaps& caps) {
  switch (shape) {
    case Shape::Subsets:
      return caps.subsets;
    case Shape::Cycles:
      return caps.cycles;
    case Shape::Lists:
      return caps.lists;
  }
  return 0;
}

unsigned long long small_factorial(unsigned m) {
  unsigned long long f = 1;
  for (unsigned i = 2; i <= m; ++i) f *= i;
  return f;
}

// Walk restricted-growth strings over {0..n-1} with exactly k blocks, in
// lexicographic order. Elements below r are pinned to rgs[i] = i (distinct
// blocks appear in first-occurrence order, so "1..r in distinct blocks" is
// exactly that prefix). `need` tracks how many more elements the size-s
// minimum still demands, for pruning. Visit gets the block sizes; returning
// false stops the walk.
class PartitionWalker {
 public:
  PartitionWalker(const StructureSpec& spec) : spec_(spec) {}

  void walk(const std::function<bool(const std::vector<unsigned>& rgs,
                                     const std::vector<unsigned>& sizes)>& visit) {
    const unsigned n = spec_.n, k = spec_.k, r = spec_.r, s = spec_.s;
    if (r > k || r > n) return;
    if (k == 0 || n < static_cast<unsigned long long>(s) * k) return;
    visit_ = &visit;
    rgs_.assign(n, 0);
    sizes_.assign(k, 0);
    blocks_ = 0;
    need_ = 0;
    stop_ = false;
    descend(0);
  }

 private:
  bool descend(unsigned i) {
    const unsigned n = spec_.n, k = spec_.k, r = spec_.r, s = spec_.s;
    if (i == n) {
      if (blocks_ == k && need_ == 0) stop_ = !(*visit_)(rgs_, sizes_);
      return !stop_;
    }
    // not enough elements left to open the remaining blocks / fill them
    if (blocks_ + (n - i) < k) return true;
    if (need_ > n - i) return true;

    const unsigned first = (i < r) ? i : 0;                    // pinned prefix
    const unsigned last = (i < r) ? i : std::min(blocks_, k - 1);
    for (unsigned b = first; b <= last; ++b) {
      const bool opens = b == blocks_;
      if (opens) {
        blocks_ += 1;
        need_ += s;
      }
      if (sizes_[b] < s) need_ -= 1;
      sizes_[b] += 1;
      rgs_[i] = b;

      if (!descend(i + 1)) return false;

      sizes_[b] -= 1;
      if (sizes_[b] < s) need_ += 1;
      if (opens) {
        blocks_ -= 1;
        need_ -= s;
      }
    }
    return true;
  }

  StructureSpec spec_;
  const std::function<bool(const std::vector<unsigned>&, const std::vector<unsigned>&)>*
      visit_ = nullptr;
  std::vector<unsigned> rgs_;
  std::vector<unsigned> sizes_;
  unsigned blocks_ = 0;
  unsigned need_ = 0;
  bool stop_ = false;
};

}  // namespace

Count enumerate_count(const StructureSpec& spec, const EnumerationCaps& caps) {
  if (spec.s == 0) throw DomainError("association order s must be >= 1");
  if (spec.n > cap_for(spec.shape, caps))
    throw CapExceeded("enumeration cap exceeded for n = " + std::to_string(spec.n));
  if (spec.k == 0) return Count(spec.n == 0 ? 1ULL : 0ULL);

  Count total(0ULL);
  PartitionWalker walker(spec);
  walker.walk([&](const std::vector<unsigned>&, const std::vector<unsigned>& sizes) {
    unsigned long long weight = 1;
    switch (spec.shape) {
      case Shape::Subsets:
        break;
      case Shape::Cycles:
        for (unsigned m : sizes) weight *= small_factorial(m - 1);
        break;
      case Shape::Lists:
        for (unsigned m : sizes) weight *= small_factorial(m);
        break;
    }
    total += Count(weight);
    return true;
  });
  return total;
}

std::vector<Structure> enumerate_witnesses(const StructureSpec& spec,
                                           std::size_t limit,
                                           const EnumerationCaps& caps) {
  if (spec.s == 0) throw DomainError("association order s must be >= 1");
  if (spec.n > cap_for(spec.shape, caps))
    throw CapExceeded("enumeration cap exceeded for n = " + std::to_string(spec.n));

  std::vector<Structure> out;
  if (limit == 0) return out;
  if (spec.k == 0) {
    if (spec.n == 0) out.push_back({});
    return out;
  }

  PartitionWalker walker(spec);
  walker.walk([&](const std::vector<unsigned>& rgs, const std::vector<unsigned>&) {
    Structure blocks(spec.k);
    for (unsigned i = 0; i < spec.n; ++i) blocks[rgs[i]].push_back(i + 1);

    if (spec.shape == Shape::Subsets) {
      out.push_back(blocks);
      return out.size() < limit;
    }

    // odometer over per-block arrangements, later blocks varying fastest
    std::vector<std::vector<unsigned>> arr(spec.k);
    for (unsigned b = 0; b < spec.k; ++b) {
      arr[b] = (spec.shape == Shape::Cycles)
                   ? std::vector<unsigned>(blocks[b].begin() + 1, blocks[b].end())
                   : blocks[b];
    }
    while (true) {
      Structure witness(spec.k);
      for (unsigned b = 0; b < spec.k; ++b) {
        if (spec.shape == Shape::Cycles) {
          witness[b].push_back(blocks[b][0]);
          witness[b].insert(witness[b].end(), arr[b].begin(), arr[b].end());
        } else {
          witness[b] = arr[b];
        }
      }
      out.push_back(std::move(witness));
      if (out.size() >= limit) return false;

      int b = static_cast<int>(spec.k) - 1;
      while (b >= 0 && !std::next_permutation(arr[b].begin(), arr[b].end())) --b;
      if (b < 0) break;  // arr[b'] for b' > b already reset to sorted order
    }
    return true;
  });
  return out;
}

}  // namespace stirling

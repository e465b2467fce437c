#pragma once

// Iteration over compositions: ordered tuples of integers >= minimum with a
// fixed number of parts and a fixed sum. Convention for zero parts: total 0
// has exactly one composition (the empty tuple), positive totals have none.
// That convention is what lets p = 0 / k = r corners of the summation
// identities collapse to a single term instead of an artificial zero.

#include "stirling/exactnum.hpp"

#include <vector>

namespace stirling {

class CompositionRange {
 public:
  CompositionRange(long long total, unsigned parts, long long minimum = 0)
      : total_(total), parts_(parts), min_(minimum) {}

  class iterator {
   public:
    iterator() = default;  // end sentinel
    iterator(long long total, unsigned parts, long long minimum)
        : min_(minimum), free_(total - static_cast<long long>(parts) * minimum) {
      if (total < 0) return;
      if (parts == 0) {
        active_ = total == 0;  // one empty composition
        return;
      }
      if (free_ < 0) return;
      cur_.assign(parts, minimum);
      cur_[0] += free_;
      active_ = true;
    }

    const std::vector<long long>& operator*() const { return cur_; }

    iterator& operator++() {
      if (cur_.empty() || cur_.back() == min_ + free_) {
        active_ = false;
        return *this;
      }
      // classic next-composition step on the slack above the minimum
      std::size_t j = cur_.size() - 2;
      while (cur_[j] == min_) --j;
      const long long tail = cur_.back() - min_;
      cur_.back() = min_;
      cur_[j] -= 1;
      cur_[j + 1] += tail + 1;
      return *this;
    }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.active_ == b.active_;
    }

   private:
    std::vector<long long> cur_;
    long long min_ = 0;
    long long free_ = 0;
    bool active_ = false;
  };

  iterator begin() const { return iterator(total_, parts_, min_); }
  iterator end() const { return iterator(); }

 private:
  long long total_;
  unsigned parts_;
  long long min_;
};

// Number of compositions of `total` into `parts` parts, each >= 0:
// C(total + parts - 1, parts - 1), with the zero-parts convention above.
inline Count composition_count(long long total, unsigned parts) {
  if (parts == 0) return Count(total == 0 ? 1ULL : 0ULL);
  if (total < 0) return Count(0ULL);
  return binomial(total + parts - 1, parts - 1);
}

}  // namespace stirling

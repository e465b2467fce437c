#pragma once

// Brute-force ground truth, independent of every formula in the library:
// enumerate set partitions of {1..n} as restricted-growth strings, filter
// by block-size and distinctness constraints, and weight each partition by
// the number of ways to arrange its blocks for the requested structure
// (cycles: (m-1)! per block; lists: m! per block; subsets: 1).

#include "stirling/exactnum.hpp"

#include <vector>

namespace stirling {

enum class Shape { Cycles, Subsets, Lists };

struct StructureSpec {
  unsigned n;  // ground set {1..n}
  unsigned k;  // number of blocks
  unsigned r;  // elements 1..r must land in distinct blocks
  unsigned s;  // minimum block size
  Shape shape;
};

struct EnumerationCaps {
  unsigned subsets = 11;
  unsigned cycles = 11;
  unsigned lists = 10;
};

// Weighted count of qualifying structures. Throws CapExceeded when n is
// past the cap for the requested shape.
Count enumerate_count(const StructureSpec& spec, const EnumerationCaps& caps = {});

// A structure is a sequence of blocks, each block an ordered arrangement of
// 1-based elements (for Subsets the block is its sorted member list; for
// Cycles the smallest member leads and the rest spell the cycle order).
// Blocks appear in order of their smallest member.
using Structure = std::vector<std::vector<unsigned>>;

// First `limit` structures in canonical order: restricted-growth strings
// lexicographically, then arrangement tuples lexicographically with later
// blocks varying fastest.
std::vector<Structure> enumerate_witnesses(const StructureSpec& spec,
                                           std::size_t limit,
                                           const EnumerationCaps& caps = {});

}  // namespace stirling

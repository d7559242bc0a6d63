#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "nclce/text.hpp"

namespace nclce {

// Counts raw symbol comparisons; monotone over a structure's lifetime.
struct ComparisonCounter {
  std::uint64_t total_symbol_comparisons = 0;
};

// min(LCE(i,j), cap) by direct scan, spending at most min(cap, n) + 1 symbol
// comparisons. Positions may be n+1 (the empty suffix), answered as 0 without
// touching any symbol.
inline Len limited_lce(const Text& t, Pos i, Pos j, Len cap, ComparisonCounter& ctr) {
  const Len n = t.size();
  if (i < 1 || j < 1 || i > n + 1 || j > n + 1) {
    throw std::out_of_range("limited_lce: position out of 1.." + std::to_string(n + 1));
  }
  if (cap < 0) throw std::invalid_argument("limited_lce: negative cap");
  const Len bound = std::min(cap, std::min(n - i + 1, n - j + 1));
  Len k = 0;
  while (k < bound) {
    ++ctr.total_symbol_comparisons;
    if (t.symbol(i + k) != t.symbol(j + k)) return k;
    ++k;
  }
  return k;
}

inline Len limited_lce(const Text& t, Pos i, Pos j, Len cap) {
  ComparisonCounter scratch;
  return limited_lce(t, i, j, cap, scratch);
}

}  // namespace nclce

#include "nclce/words.hpp"

#include <bit>
#include <random>
#include <vector>

namespace nclce::words {

namespace {
constexpr Symbol kBase = 'a';
}

Text unary(Len n) {
  return Text(std::vector<Symbol>(static_cast<std::size_t>(n), kBase));
}

Text fibonacci(Len n) {
  std::vector<Symbol> prev{kBase + 1};
  std::vector<Symbol> cur{kBase};
  while (cur.size() < static_cast<std::size_t>(n)) {
    std::vector<Symbol> next = cur;
    next.insert(next.end(), prev.begin(), prev.end());
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur.resize(static_cast<std::size_t>(n));
  return Text(std::move(cur));
}

Text thue_morse(Len n) {
  std::vector<Symbol> symbols(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    symbols[i] = kBase + (std::popcount(i) & 1u);
  }
  return Text(std::move(symbols));
}

Text random_word(Len n, unsigned sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Symbol> symbols(static_cast<std::size_t>(n));
  for (auto& s : symbols) s = kBase + rng() % sigma;
  return Text(std::move(symbols));
}

}  // namespace nclce::words

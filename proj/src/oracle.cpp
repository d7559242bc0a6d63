#include "nclce/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace nclce::oracle {

namespace {

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace

Len naive_lce(const Text& t, Pos i, Pos j) {
  const Len n = t.size();
  if (i < 1 || j < 1 || i > n + 1 || j > n + 1) {
    throw std::out_of_range("naive_lce: position out of 1.." + std::to_string(n + 1));
  }
  Len k = 0;
  while (i + k <= n && j + k <= n && t.symbol(i + k) == t.symbol(j + k)) ++k;
  return k;
}

bool has_period(const Text& t, Pos a, Pos b, Len p) {
  for (Pos x = a; x + p <= b; ++x) {
    if (t.symbol(x) != t.symbol(x + p)) return false;
  }
  return true;
}

Len shortest_period(const Text& t, Pos a, Pos b) {
  const Len length = b - a + 1;
  for (Len p = 1; p < length; ++p) {
    if (has_period(t, a, b, p)) return p;
  }
  return length;
}

std::vector<Run> naive_runs(const Text& t) {
  const Len n = t.size();
  std::vector<Run> out;
  std::vector<Len> border;
  for (Pos a = 1; a <= n; ++a) {
    const Len m = n - a + 1;
    border.assign(static_cast<std::size_t>(m), 0);
    for (Len q = 1; q < m; ++q) {
      Len k = border[static_cast<std::size_t>(q - 1)];
      while (k > 0 && t.symbol(a + q) != t.symbol(a + k)) {
        k = border[static_cast<std::size_t>(k - 1)];
      }
      if (t.symbol(a + q) == t.symbol(a + k)) ++k;
      border[static_cast<std::size_t>(q)] = k;
    }
    for (Len q = 2; q <= m; ++q) {
      const Len p = q - border[static_cast<std::size_t>(q - 1)];
      if (2 * p > q) continue;
      const Pos b = a + q - 1;
      if (a > 1 && t.symbol(a - 1) == t.symbol(a - 1 + p)) continue;
      if (b < n && t.symbol(b + 1) == t.symbol(b + 1 - p)) continue;
      out.push_back({a, b, p});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// w[u] < w[v] lexicographically under ord; a proper prefix is smaller.
bool factor_less(const Text& t, Interval u, Interval v, SymbolOrder ord) {
  Pos i = u.lo;
  Pos j = v.lo;
  while (i <= u.hi && j <= v.hi) {
    const auto cmp = t.compare_at(i, j, ord);
    if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::less;
    ++i;
    ++j;
  }
  return i > u.hi && j <= v.hi;
}

std::int32_t build_factorization(const Text& t, SymbolOrder ord, Pos lo, Pos hi,
                                 std::vector<LyndonTree::Node>& nodes) {
  if (lo == hi) {
    nodes.push_back({{lo, hi}, -1, -1});
    return static_cast<std::int32_t>(nodes.size() - 1);
  }
  // Split off the longest proper suffix that is a Lyndon word. For lo = 0 the
  // candidates are the real suffixes: the virtual sentinel makes the prefix
  // side a Lyndon word automatically.
  Pos split = hi;
  for (Pos s = lo + 1; s <= hi; ++s) {
    if (is_lyndon(t, {s, hi}, ord)) {
      split = s;
      break;
    }
  }
  const std::int32_t left = build_factorization(t, ord, lo, split - 1, nodes);
  const std::int32_t right = build_factorization(t, ord, split, hi, nodes);
  nodes.push_back({{lo, hi}, left, right});
  return static_cast<std::int32_t>(nodes.size() - 1);
}

}  // namespace

bool is_lyndon(const Text& t, Interval iv, SymbolOrder ord) {
  for (Pos s = iv.lo + 1; s <= iv.hi; ++s) {
    if (!factor_less(t, iv, {s, iv.hi}, ord)) return false;
  }
  return true;
}

LyndonTree naive_lyndon_tree(const Text& t, SymbolOrder ord) {
  std::vector<LyndonTree::Node> nodes;
  nodes.reserve(static_cast<std::size_t>(2 * (t.size() + 1)));
  const std::int32_t root = build_factorization(t, ord, 0, t.size(), nodes);
  return LyndonTree(ord, std::move(nodes), root);
}

std::uint64_t naive_square_count(const Text& t) {
  const Len n = t.size();
  std::uint64_t count = 0;
  for (Len m = 1; 2 * m <= n; ++m) {
    for (Pos i = 1; i + 2 * m - 1 <= n; ++i) {
      bool equal = true;
      for (Len k = 0; k < m; ++k) {
        if (t.symbol(i + k) != t.symbol(i + m + k)) {
          equal = false;
          break;
        }
      }
      count += equal ? 1 : 0;
    }
  }
  return count;
}

std::optional<CrossingWitness> find_crossing(const PairSet& ps) {
  for (std::size_t i = 0; i < ps.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.pairs.size(); ++j) {
      const auto [a, b] = ps.pairs[i];
      const auto [c, d] = ps.pairs[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
        return CrossingWitness{ps.pairs[i], ps.pairs[j]};
      }
    }
  }
  return std::nullopt;
}

PairSet shrink_pairs(const PairSet& ps, Len t) {
  if (t < 1) throw std::invalid_argument("shrink_pairs: t must be positive");
  PairSet out;
  out.universe = (ps.universe + t - 1) / t;
  out.pairs.reserve(ps.pairs.size());
  for (const auto& [a, b] : ps.pairs) {
    out.pairs.emplace_back((a + t - 1) / t, (b + t - 1) / t);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
  return out;
}

std::vector<std::pair<Pos, Pos>> gen_noncrossing_queries(Pos n, std::size_t q,
                                                         std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_noncrossing_queries: n must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Pos, Pos>> pool;

  // Random laminar family: recursive random splits of [1, n].
  std::vector<std::pair<Pos, Pos>> todo{{1, n}};
  while (!todo.empty()) {
    const auto [lo, hi] = todo.back();
    todo.pop_back();
    pool.emplace_back(lo, hi);
    if (lo < hi) {
      const Pos mid = lo + static_cast<Pos>(rand_below(rng, static_cast<std::uint64_t>(hi - lo)));
      todo.emplace_back(lo, mid);
      todo.emplace_back(mid + 1, hi);
    }
  }
  // Diagonal and adjacent pairs cross nothing.
  for (Pos i = 0; i < (n + 3) / 4; ++i) {
    const Pos a = 1 + static_cast<Pos>(rand_below(rng, static_cast<std::uint64_t>(n)));
    pool.emplace_back(a, a);
  }
  if (n >= 2) {
    for (Pos i = 0; i < (n + 3) / 4; ++i) {
      const Pos a = 1 + static_cast<Pos>(rand_below(rng, static_cast<std::uint64_t>(n - 1)));
      pool.emplace_back(a, a + 1);
    }
  }

  for (std::size_t i = pool.size(); i > 1; --i) {
    std::swap(pool[i - 1], pool[rand_below(rng, i)]);
  }
  std::vector<std::pair<Pos, Pos>> out;
  out.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    out.push_back(i < pool.size() ? pool[i] : pool[rand_below(rng, pool.size())]);
  }
  return out;
}

}  // namespace nclce::oracle

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nclce/lyndon.hpp"
#include "nclce/runs.hpp"
#include "nclce/text.hpp"

// Brute-force reference implementations for property tests and acceptance
// runs. None of them uses the leveled query structure; they exist to be
// obviously correct, not fast.
namespace nclce::oracle {

// lcp(w[i, n], w[j, n]) by direct scan; positions up to n+1.
Len naive_lce(const Text& t, Pos i, Pos j);

// Whether p is a period of w[a, b], by definition.
bool has_period(const Text& t, Pos a, Pos b, Len p);

// Smallest period of w[a, b], trying p = 1, 2, ... by scan.
Len shortest_period(const Text& t, Pos a, Pos b);

// All runs via one prefix function per suffix: the shortest period of every
// prefix of w[a, n] is read off its border table, and the two maximality
// conditions reduce to single symbol comparisons.
std::vector<Run> naive_runs(const Text& t);

// w[iv.lo, iv.hi] smaller than each of its proper non-empty suffixes?
bool is_lyndon(const Text& t, Interval iv, SymbolOrder ord);

// Recursive standard factorization of the sentinel-prefixed text.
LyndonTree naive_lyndon_tree(const Text& t, SymbolOrder ord);

// Number of pairs (i, m) with w[i, i+m-1] = w[i+m, i+2m-1].
std::uint64_t naive_square_count(const Text& t);

struct PairSet {
  std::vector<std::pair<Pos, Pos>> pairs;  // 1 <= a <= b <= universe
  Pos universe = 0;
};

struct CrossingWitness {
  std::pair<Pos, Pos> first;
  std::pair<Pos, Pos> second;
};

// First pair of crossing pairs, if any.
std::optional<CrossingWitness> find_crossing(const PairSet& ps);

inline bool is_noncrossing(const PairSet& ps) { return !find_crossing(ps).has_value(); }

// {(ceil(a/t), ceil(b/t))} as a deduplicated set over universe ceil(n/t).
PairSet shrink_pairs(const PairSet& ps, Len t);

// Deterministic non-crossing workload: a random laminar interval family
// plus diagonal and adjacent pairs, shuffled into an on-line order. Repeats
// pairs once the distinct pool (always < 3n) is exhausted.
std::vector<std::pair<Pos, Pos>> gen_noncrossing_queries(Pos n, std::size_t q,
                                                         std::uint64_t seed);

}  // namespace nclce::oracle

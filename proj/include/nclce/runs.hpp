#pragma once

#include <cstdint>
#include <vector>

#include "nclce/lyndon.hpp"
#include "nclce/nc_lce.hpp"
#include "nclce/text.hpp"

namespace nclce {

// Maximal repetition: period is the shortest period of w[start, end],
// 2 * period <= end - start + 1, and neither w[start-1, end] nor
// w[start, end+1] keeps that period.
struct Run {
  Pos start = 0;
  Pos end = 0;
  Len period = 0;
  friend auto operator<=>(const Run&, const Run&) = default;
};

enum class Execution { serial, parallel };

struct RunsOptions {
  Execution execution = Execution::parallel;
  NcLceOptions backend;  // applied to all six query groups
};

struct RunsStats {
  std::uint64_t total_comparisons = 0;
  std::uint64_t construction_comparisons = 0;
  std::uint64_t extension_comparisons = 0;
  std::uint64_t candidates = 0;
  // Per query group: tree0, tree1, right0, right1, left0, left1.
  std::vector<LevelStats> groups;
};

/**
 * All runs of t, sorted by (start, end).
 *
 * Both Lyndon trees are built first; every real node [a, b] then proposes a
 * candidate run with period b - a + 1, extended right by an LCE(a, b+1)
 * query and left by the symmetric query on the reversed text. Candidates of
 * length >= twice the period survive, deduplicated per (start, end) keeping
 * the smallest period. The six query groups (two constructions, two right
 * extension passes, two left extension passes) each use a fresh backend, so
 * every group issues only non-crossing queries; the groups are independent
 * and run concurrently under Execution::parallel.
 */
std::vector<Run> compute_runs(const Text& t, const RunsOptions& options,
                              RunsStats* stats = nullptr);

inline std::vector<Run> compute_runs(const Text& t) { return compute_runs(t, RunsOptions{}); }

// Square occurrences (i, m) with w[i, i+m-1] = w[i+m, i+2m-1], counted from
// the run set: a run (s, e, p) of length l contributes l - 2kp + 1 squares
// for every multiple kp of its period with 2kp <= l.
std::uint64_t square_occurrences_from_runs(const std::vector<Run>& runs);

std::uint64_t count_square_occurrences(const Text& t);

}  // namespace nclce

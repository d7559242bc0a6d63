#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nclce/limited_lce.hpp"
#include "nclce/text.hpp"

namespace nclce {

// Index of the 2^level-aligned block containing pos, i.e. ceil(pos / 2^level).
// Block x covers positions [(x-1) * 2^level + 1, x * 2^level].
inline Pos block_of(int level, Pos pos) {
  return (pos + (Pos(1) << level) - 1) >> level;
}

struct NcLceOptions {
  // Reject any query that crosses a previously asked one.
  bool strict = false;
  // Keep the distinct query set of every level for later inspection.
  bool record_level_sets = false;
  // Re-check every stored block-pair witness against a direct scan.
#ifndef NDEBUG
  bool verify_witnesses = true;
#else
  bool verify_witnesses = false;
#endif
};

// Raised in strict mode when a query crosses an earlier one.
class CrossingViolation : public std::runtime_error {
 public:
  CrossingViolation(std::pair<Pos, Pos> previous, std::pair<Pos, Pos> current);

  std::pair<Pos, Pos> previous_pair() const { return previous_; }
  std::pair<Pos, Pos> current_pair() const { return current_; }

 private:
  std::pair<Pos, Pos> previous_;
  std::pair<Pos, Pos> current_;
};

// Raised by enabled witness verification when stored data disagrees with the text.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

struct LevelStats {
  struct Level {
    std::uint64_t queries_asked = 0;       // |S_i| counted with multiplicity
    std::uint64_t block_pairs_created = 0;
    std::uint64_t forwarded_calls = 0;
    std::uint64_t visited_transitions = 0;
    std::uint64_t full_transitions = 0;
    std::uint64_t full_plus_transitions = 0;
  };
  std::vector<Level> levels;
  std::uint64_t total_comparisons = 0;
  std::uint64_t top_level_queries = 0;
  // Largest lifetime forwarded-call count of any block-pair (bounded by 4).
  std::uint64_t max_forwarded_per_pair = 0;
  // Forwarded calls that neither repeat the current query nor have argument
  // gap <= 2^(level+1); always 0 for a correct implementation.
  std::uint64_t bad_forwarded_calls = 0;

  void accumulate(const LevelStats& other);
};

// One entry of the block-pair trace of the most recent query.
// state: 'S' short, 'I' initial, 'V' visited, 'F' full, 'P' full+.
struct WorkingStep {
  int level;
  Pos block_a;
  Pos block_b;
  char state;
};

/**
 * On-line answering of non-crossing LCE queries via leveled block-pairs.
 *
 * The structure keeps one layer per level i = 0, 1, ... as long as
 * 3 * 2^i does not exceed the text length. A level-i query (a, b) is first
 * probed with a scan capped at 3 * 2^i; if the cap is not reached the probe
 * already is the answer (a short query). Otherwise the query is relevant and
 * is routed to the block-pair of the 2^i-aligned blocks containing a and b.
 * A block-pair moves monotonically through four states:
 *
 *   initial    -- nothing stored; the query is forwarded one level up and its
 *                 answer L recorded as visited(a, b, L).
 *   visited    -- a query aligned with the stored one is answered in O(1);
 *                 a non-aligned one reveals a period p <= 2^(i+1) shared by
 *                 both blocks, whose right-maximal extents d_A, d_B are
 *                 located with two forwarded probes of gap p, giving full.
 *   full       -- if d_A - a != d_B - b the answer is min of the two;
 *                 otherwise one last forwarded call fixes L' = LCE(d_A, d_B)
 *                 and the pair becomes full+.
 *   full+      -- every relevant query is answered in O(1).
 *
 * A block-pair therefore forwards at most four queries over its lifetime,
 * which keeps the total work across levels near-linear when the top-level
 * query set is non-crossing.
 *
 * Instances are single-owner: every query mutates internal state. Distinct
 * instances over the same Text are independent.
 */
class NcLceStructure {
 public:
  explicit NcLceStructure(const Text& text, NcLceOptions options = {});
  ~NcLceStructure();

  NcLceStructure(NcLceStructure&&) noexcept;
  NcLceStructure& operator=(NcLceStructure&&) noexcept;
  NcLceStructure(const NcLceStructure&) = delete;
  NcLceStructure& operator=(const NcLceStructure&) = delete;

  // LCE(a, b) for 1 <= a, b <= n; arguments are swapped internally if a > b.
  // Throws std::out_of_range on bad positions and CrossingViolation in strict
  // mode when (a, b) crosses an earlier query.
  Len lce(Pos a, Pos b);

  const Text& text() const { return *text_; }
  bool fresh() const;
  bool strict() const { return options_.strict; }

  LevelStats stats() const;
  std::uint64_t total_comparisons() const { return counter_.total_symbol_comparisons; }
  int level_count() const { return max_levels_; }

  // Block-pair trace of the most recent lce() call.
  const std::vector<WorkingStep>& last_working_sequence() const { return working_; }

  // State letter ('V', 'F' or 'P') of a block-pair, or nullopt while initial.
  std::optional<char> block_pair_state(int level, Pos blk_a, Pos blk_b) const;

  // Distinct top-level pairs asked so far (strict mode only), sorted.
  std::vector<std::pair<Pos, Pos>> asked_pairs() const;

  // Distinct (a, b) per level (record_level_sets only), sorted.
  std::vector<std::vector<std::pair<Pos, Pos>>> level_query_sets() const;

 private:
  struct BlockPair;
  struct Level;
  class EndpointTree;

  Len level_lce(int level, Pos a, Pos b);
  Len handle_visited(int level, BlockPair& bp, Pos a, Pos b);
  Len handle_full(int level, BlockPair& bp, Pos a, Pos b);
  void note_forward(int level, Pos cur_a, Pos cur_b, Pos x, Pos y, std::uint8_t& lifetime);
  void check_strict(Pos a, Pos b);

  Len scan_lce(Pos i, Pos j) const;
  void verify_visited(int level, const BlockPair& bp) const;
  void verify_full(int level, const BlockPair& bp) const;
  void verify_full_plus(const BlockPair& bp) const;

  const Text* text_;
  NcLceOptions options_;
  int max_levels_;
  std::vector<Level> levels_;
  LevelStats stats_;
  ComparisonCounter counter_;
  std::vector<WorkingStep> working_;
  std::unordered_set<std::uint64_t> asked_;
  std::unique_ptr<EndpointTree> max_right_;
  std::unique_ptr<EndpointTree> min_left_;
};

}  // namespace nclce

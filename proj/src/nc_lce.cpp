#include "nclce/nc_lce.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace nclce {

namespace {

// A level-i query is relevant iff its LCE reaches 3 * 2^i.
constexpr Len kRelevanceFactor = 3;

std::uint64_t pack_pair(Pos a, Pos b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

std::pair<Pos, Pos> unpack_pair(std::uint64_t key) {
  return {static_cast<Pos>(key >> 32), static_cast<Pos>(key & 0xffffffffu)};
}

std::string pair_str(std::pair<Pos, Pos> p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

CrossingViolation::CrossingViolation(std::pair<Pos, Pos> previous, std::pair<Pos, Pos> current)
    : std::runtime_error("crossing LCE queries: " + pair_str(current) +
                         " crosses earlier " + pair_str(previous)),
      previous_(previous),
      current_(current) {}

void LevelStats::accumulate(const LevelStats& other) {
  if (levels.size() < other.levels.size()) levels.resize(other.levels.size());
  for (std::size_t i = 0; i < other.levels.size(); ++i) {
    levels[i].queries_asked += other.levels[i].queries_asked;
    levels[i].block_pairs_created += other.levels[i].block_pairs_created;
    levels[i].forwarded_calls += other.levels[i].forwarded_calls;
    levels[i].visited_transitions += other.levels[i].visited_transitions;
    levels[i].full_transitions += other.levels[i].full_transitions;
    levels[i].full_plus_transitions += other.levels[i].full_plus_transitions;
  }
  total_comparisons += other.total_comparisons;
  top_level_queries += other.top_level_queries;
  max_forwarded_per_pair = std::max(max_forwarded_per_pair, other.max_forwarded_per_pair);
  bad_forwarded_calls += other.bad_forwarded_calls;
}

struct NcLceStructure::BlockPair {
  enum class State : std::uint8_t { visited, full, full_plus };

  State state = State::visited;
  std::uint8_t forwarded = 0;
  // visited witness: lce0 = LCE(a0, b0) >= 3 * 2^level
  Pos a0 = 0;
  Pos b0 = 0;
  Len lce0 = 0;
  // full/full+ witness: first period breaks right of the block edges
  Pos d_a = 0;
  Pos d_b = 0;
  Len lce_d = 0;         // full+ only: LCE(d_a, d_b)
  Len verify_period = 0;  // set only while witness verification is enabled
};

struct NcLceStructure::Level {
  std::unordered_map<std::uint64_t, BlockPair> pairs;
  std::unordered_set<std::uint64_t> distinct_queries;  // record_level_sets only
};

// Point-update / range-query tree over positions 1..n keeping, per key
// position, the extreme partner endpoint of inserted pairs. Supports the
// strict-mode crossing test: a new chord (a, b) crosses an old one iff some
// stored left endpoint in (a, b) has its right partner beyond b, or some
// stored right endpoint in (a, b) has its left partner before a.
class NcLceStructure::EndpointTree {
 public:
  EndpointTree(Pos n, bool maximize) : maximize_(maximize) {
    size_ = 1;
    while (size_ < n + 1) size_ <<= 1;
    const Pos sentinel = maximize_ ? -1 : n + 2;
    nodes_.assign(static_cast<std::size_t>(2 * size_), {sentinel, 0});
  }

  void update(Pos key, Pos value) {
    std::size_t i = static_cast<std::size_t>(size_ + key);
    if (better(value, nodes_[i].first)) {
      nodes_[i] = {value, key};
      for (i >>= 1; i >= 1; i >>= 1) {
        nodes_[i] = pick(nodes_[2 * i], nodes_[2 * i + 1]);
      }
    }
  }

  // Extreme (key, partner) over keys in [lo, hi]; nullopt if empty.
  std::optional<std::pair<Pos, Pos>> query(Pos lo, Pos hi) const {
    if (lo > hi) return std::nullopt;
    const Pos sentinel = maximize_ ? -1 : size_ + 2;
    std::pair<Pos, Pos> best{sentinel, 0};
    std::size_t l = static_cast<std::size_t>(size_ + lo);
    std::size_t r = static_cast<std::size_t>(size_ + hi + 1);
    while (l < r) {
      if (l & 1) best = pick(best, nodes_[l++]);
      if (r & 1) best = pick(best, nodes_[--r]);
      l >>= 1;
      r >>= 1;
    }
    if (best.first == sentinel || best.second == 0) return std::nullopt;
    return std::make_pair(best.second, best.first);  // (key, partner)
  }

 private:
  bool better(Pos a, Pos b) const { return maximize_ ? a > b : a < b; }
  std::pair<Pos, Pos> pick(std::pair<Pos, Pos> a, std::pair<Pos, Pos> b) const {
    return better(b.first, a.first) ? b : a;
  }

  bool maximize_;
  Pos size_;
  std::vector<std::pair<Pos, Pos>> nodes_;  // (partner, key)
};

NcLceStructure::NcLceStructure(const Text& text, NcLceOptions options)
    : text_(&text), options_(options) {
  const Len n = text.size();
  if (n >= (Pos(1) << 31)) {
    throw std::invalid_argument("text longer than 2^31 - 1 symbols is not supported");
  }
  int levels = 0;
  while ((kRelevanceFactor << levels) <= n) ++levels;
  max_levels_ = levels + 1;  // the last level answers everything as short
  levels_.resize(static_cast<std::size_t>(max_levels_));
  stats_.levels.resize(static_cast<std::size_t>(max_levels_));
  if (options_.strict) {
    max_right_ = std::make_unique<EndpointTree>(n, true);
    min_left_ = std::make_unique<EndpointTree>(n, false);
  }
}

NcLceStructure::~NcLceStructure() = default;
NcLceStructure::NcLceStructure(NcLceStructure&&) noexcept = default;
NcLceStructure& NcLceStructure::operator=(NcLceStructure&&) noexcept = default;

bool NcLceStructure::fresh() const { return stats_.top_level_queries == 0; }

LevelStats NcLceStructure::stats() const {
  LevelStats snapshot = stats_;
  snapshot.total_comparisons = counter_.total_symbol_comparisons;
  return snapshot;
}

void NcLceStructure::check_strict(Pos a, Pos b) {
  if (a < b) {
    // Some stored (x, y) with a < x < b < y?
    if (auto hit = max_right_->query(a + 1, b - 1); hit && hit->second > b) {
      throw CrossingViolation({hit->first, hit->second}, {a, b});
    }
    // Some stored (x, y) with x < a < y < b?
    if (auto hit = min_left_->query(a + 1, b - 1); hit && hit->second < a) {
      throw CrossingViolation({hit->second, hit->first}, {a, b});
    }
    max_right_->update(a, b);
    min_left_->update(b, a);
  }
  asked_.insert(pack_pair(a, b));
}

Len NcLceStructure::lce(Pos a, Pos b) {
  const Len n = text_->size();
  if (a < 1 || b < 1 || a > n || b > n) {
    throw std::out_of_range("lce: position out of 1.." + std::to_string(n));
  }
  if (a > b) std::swap(a, b);
  if (options_.strict) check_strict(a, b);
  ++stats_.top_level_queries;
  working_.clear();
  if (a == b) return n - a + 1;
  return level_lce(0, a, b);
}

Len NcLceStructure::level_lce(int level, Pos a, Pos b) {
  assert(level < max_levels_ && a < b);
  Level& lv = levels_[static_cast<std::size_t>(level)];
  auto& ls = stats_.levels[static_cast<std::size_t>(level)];
  ++ls.queries_asked;
  if (options_.record_level_sets) lv.distinct_queries.insert(pack_pair(a, b));

  const Len cap = kRelevanceFactor << level;
  const Len probed = limited_lce(*text_, a, b, cap, counter_);
  const Pos blk_a = block_of(level, a);
  const Pos blk_b = block_of(level, b);
  if (probed < cap) {
    working_.push_back({level, blk_a, blk_b, 'S'});
    return probed;
  }

  const std::uint64_t key = pack_pair(blk_a, blk_b);
  auto it = lv.pairs.find(key);
  if (it == lv.pairs.end()) {
    working_.push_back({level, blk_a, blk_b, 'I'});
    BlockPair bp;
    note_forward(level, a, b, a, b, bp.forwarded);
    const Len answer = level_lce(level + 1, a, b);
    bp.state = BlockPair::State::visited;
    bp.a0 = a;
    bp.b0 = b;
    bp.lce0 = answer;
    if (options_.verify_witnesses) verify_visited(level, bp);
    lv.pairs.emplace(key, bp);
    ++ls.block_pairs_created;
    ++ls.visited_transitions;
    return answer;
  }
  BlockPair& bp = it->second;
  if (bp.state == BlockPair::State::visited) return handle_visited(level, bp, a, b);
  return handle_full(level, bp, a, b);
}

Len NcLceStructure::handle_visited(int level, BlockPair& bp, Pos a, Pos b) {
  const Pos blk_a = block_of(level, a);
  const Pos blk_b = block_of(level, b);
  working_.push_back({level, blk_a, blk_b, 'V'});
  if (a - bp.a0 == b - bp.b0) {
    // Shift of the stored witness; both LCEs reach past the shift.
    return bp.lce0 + (bp.a0 - a);
  }
  const Len p = std::abs((a - bp.a0) - (b - bp.b0));
  const Pos a_edge = blk_a << level;  // max A
  const Pos b_edge = blk_b << level;  // max B
  note_forward(level, a, b, a_edge, a_edge + p, bp.forwarded);
  bp.d_a = a_edge + p + level_lce(level + 1, a_edge, a_edge + p);
  note_forward(level, a, b, b_edge, b_edge + p, bp.forwarded);
  bp.d_b = b_edge + p + level_lce(level + 1, b_edge, b_edge + p);
  bp.state = BlockPair::State::full;
  if (options_.verify_witnesses) {
    bp.verify_period = p;
    verify_full(level, bp);
  }
  ++stats_.levels[static_cast<std::size_t>(level)].full_transitions;
  return handle_full(level, bp, a, b);
}

Len NcLceStructure::handle_full(int level, BlockPair& bp, Pos a, Pos b) {
  const Len dist_a = bp.d_a - a;
  const Len dist_b = bp.d_b - b;
  const char tag = bp.state == BlockPair::State::full ? 'F' : 'P';
  working_.push_back({level, block_of(level, a), block_of(level, b), tag});
  if (dist_a != dist_b) return std::min(dist_a, dist_b);
  if (bp.state == BlockPair::State::full) {
    note_forward(level, a, b, a, b, bp.forwarded);
    bp.lce_d = level_lce(level + 1, a, b) - dist_a;
    bp.state = BlockPair::State::full_plus;
    if (options_.verify_witnesses) verify_full_plus(bp);
    ++stats_.levels[static_cast<std::size_t>(level)].full_plus_transitions;
  }
  return dist_a + bp.lce_d;
}

void NcLceStructure::note_forward(int level, Pos cur_a, Pos cur_b, Pos x, Pos y,
                                  std::uint8_t& lifetime) {
  ++stats_.levels[static_cast<std::size_t>(level)].forwarded_calls;
  ++lifetime;
  stats_.max_forwarded_per_pair =
      std::max<std::uint64_t>(stats_.max_forwarded_per_pair, lifetime);
  const bool is_current = (x == cur_a && y == cur_b);
  const bool small_gap = (x < y && y <= x + (Pos(2) << level));
  if (!is_current && !small_gap) ++stats_.bad_forwarded_calls;
}

Len NcLceStructure::scan_lce(Pos i, Pos j) const {
  const Len n = text_->size();
  Len k = 0;
  while (i + k <= n && j + k <= n && text_->symbol(i + k) == text_->symbol(j + k)) ++k;
  return k;
}

void NcLceStructure::verify_visited(int level, const BlockPair& bp) const {
  if (bp.lce0 != scan_lce(bp.a0, bp.b0) || bp.lce0 < (kRelevanceFactor << level)) {
    throw InvariantViolation("visited witness mismatch at level " + std::to_string(level));
  }
}

void NcLceStructure::verify_full(int level, const BlockPair& bp) const {
  const Len n = text_->size();
  const Len p = bp.verify_period;
  if (p < 1 || p > (Pos(2) << level)) {
    throw InvariantViolation("full witness period out of range");
  }
  const Pos edges[2] = {block_of(level, bp.a0) << level, block_of(level, bp.b0) << level};
  const Pos breaks[2] = {bp.d_a, bp.d_b};
  for (int side = 0; side < 2; ++side) {
    const Pos start = edges[side];
    const Pos stop = breaks[side];
    if (stop > n + 1 || stop - start < p + (Pos(1) << level)) {
      throw InvariantViolation("full witness fragment too short");
    }
    for (Pos x = start; x + p < stop; ++x) {
      if (text_->symbol(x) != text_->symbol(x + p)) {
        throw InvariantViolation("full witness fragment not periodic");
      }
    }
    if (stop <= n && text_->symbol(stop - p) == text_->symbol(stop)) {
      throw InvariantViolation("full witness period does not break");
    }
  }
}

void NcLceStructure::verify_full_plus(const BlockPair& bp) const {
  if (bp.lce_d != scan_lce(bp.d_a, bp.d_b)) {
    throw InvariantViolation("full+ witness mismatch");
  }
}

std::optional<char> NcLceStructure::block_pair_state(int level, Pos blk_a, Pos blk_b) const {
  if (level < 0 || level >= max_levels_) return std::nullopt;
  const auto& pairs = levels_[static_cast<std::size_t>(level)].pairs;
  const auto it = pairs.find(pack_pair(blk_a, blk_b));
  if (it == pairs.end()) return std::nullopt;
  switch (it->second.state) {
    case BlockPair::State::visited: return 'V';
    case BlockPair::State::full: return 'F';
    case BlockPair::State::full_plus: return 'P';
  }
  return std::nullopt;
}

std::vector<std::pair<Pos, Pos>> NcLceStructure::asked_pairs() const {
  std::vector<std::pair<Pos, Pos>> out;
  out.reserve(asked_.size());
  for (std::uint64_t key : asked_) out.push_back(unpack_pair(key));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::pair<Pos, Pos>>> NcLceStructure::level_query_sets() const {
  std::vector<std::vector<std::pair<Pos, Pos>>> out(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    out[i].reserve(levels_[i].distinct_queries.size());
    for (std::uint64_t key : levels_[i].distinct_queries) out[i].push_back(unpack_pair(key));
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

}  // namespace nclce

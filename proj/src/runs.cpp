#include "nclce/runs.hpp"

#include <algorithm>
#include <cassert>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nclce {

namespace {

struct Candidate {
  Pos start;
  Pos end;
  Len period;
};

// Real intervals of the tree (the sentinel spine [0, *] proposes nothing).
std::vector<Interval> real_intervals(const LyndonTree& tree) {
  std::vector<Interval> out;
  for (const Interval& iv : tree.preorder_intervals()) {
    if (iv.lo >= 1) out.push_back(iv);
  }
  return out;
}

struct TreeGroups {
  std::vector<Interval> nodes;
  std::vector<Len> rho;     // right periodicity extension per node
  std::vector<Len> lambda;  // left periodicity extension per node
  LevelStats construction;
  LevelStats right;
  LevelStats left;
};

void right_extension_pass(const Text& t, const NcLceOptions& backend_options, TreeGroups& g) {
  const Len n = t.size();
  NcLceStructure fwd(t, backend_options);
  g.rho.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto [a, b] = g.nodes[i];
    g.rho[i] = b < n ? fwd.lce(a, b + 1) : 0;
  }
  g.right = fwd.stats();
}

void left_extension_pass(const Text& rev, Len n, const NcLceOptions& backend_options,
                         TreeGroups& g) {
  NcLceStructure bwd(rev, backend_options);
  g.lambda.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto [a, b] = g.nodes[i];
    // LCE on the reversed text, i.e. the longest common suffix of the
    // prefixes ending at b and a-1.
    g.lambda[i] = a > 1 ? bwd.lce(n + 1 - b, n + 2 - a) : 0;
  }
  g.left = bwd.stats();
}

TreeGroups tree_groups(const Text& t, const Text& rev, SymbolOrder ord,
                       const NcLceOptions& backend_options, bool parallel) {
  TreeGroups g;
  {
    NcLceStructure construction(t, backend_options);
    const LyndonTree tree = lyndon_tree(t, ord, construction);
    g.construction = construction.stats();
    g.nodes = real_intervals(tree);
  }
  const Len n = t.size();
#ifdef _OPENMP
  if (parallel) {
    std::exception_ptr right_error;
    std::exception_ptr left_error;
#pragma omp task shared(g, right_error)
    {
      try {
        right_extension_pass(t, backend_options, g);
      } catch (...) {
        right_error = std::current_exception();
      }
    }
    try {
      left_extension_pass(rev, n, backend_options, g);
    } catch (...) {
      left_error = std::current_exception();
    }
#pragma omp taskwait
    if (right_error) std::rethrow_exception(right_error);
    if (left_error) std::rethrow_exception(left_error);
    return g;
  }
#else
  (void)parallel;
#endif
  right_extension_pass(t, backend_options, g);
  left_extension_pass(rev, n, backend_options, g);
  return g;
}

void collect_candidates(const TreeGroups& g, Len n, std::vector<Candidate>& out) {
  (void)n;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto [a, b] = g.nodes[i];
    const Len period = b - a + 1;
    const Pos start = a - g.lambda[i];
    const Pos end = b + g.rho[i];
    if (end - start + 1 >= 2 * period) out.push_back({start, end, period});
  }
}

}  // namespace

std::vector<Run> compute_runs(const Text& t, const RunsOptions& options, RunsStats* stats) {
  if (stats) *stats = RunsStats{};
  const Len n = t.size();
  if (n <= 1) return {};

  const Text rev = t.reversed();
  TreeGroups groups[2];
  const bool parallel = options.execution == Execution::parallel;

#ifdef _OPENMP
  if (parallel) {
    std::exception_ptr errors[2] = {nullptr, nullptr};
#pragma omp parallel
#pragma omp single nowait
    {
      for (int idx = 0; idx < 2; ++idx) {
#pragma omp task shared(groups, errors) firstprivate(idx)
        {
          try {
            const SymbolOrder ord = idx == 0 ? SymbolOrder::order0 : SymbolOrder::order1;
            groups[idx] = tree_groups(t, rev, ord, options.backend, true);
          } catch (...) {
            errors[idx] = std::current_exception();
          }
        }
      }
    }
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  } else
#endif
  {
    groups[0] = tree_groups(t, rev, SymbolOrder::order0, options.backend, false);
    groups[1] = tree_groups(t, rev, SymbolOrder::order1, options.backend, false);
  }

  std::vector<Candidate> candidates;
  collect_candidates(groups[0], n, candidates);
  collect_candidates(groups[1], n, candidates);

  if (stats) {
    stats->candidates = candidates.size();
    stats->groups = {groups[0].construction, groups[1].construction, groups[0].right,
                     groups[1].right,        groups[0].left,         groups[1].left};
    for (const LevelStats& ls : stats->groups) stats->total_comparisons += ls.total_comparisons;
    stats->construction_comparisons = groups[0].construction.total_comparisons +
                                      groups[1].construction.total_comparisons;
    stats->extension_comparisons = stats->total_comparisons - stats->construction_comparisons;
  }

  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.start, x.end, x.period) < std::tie(y.start, y.end, y.period);
  });
  std::vector<Run> runs;
  for (const Candidate& c : candidates) {
    if (!runs.empty() && runs.back().start == c.start && runs.back().end == c.end) continue;
    runs.push_back({c.start, c.end, c.period});
  }
  return runs;
}

std::uint64_t square_occurrences_from_runs(const std::vector<Run>& runs) {
  std::uint64_t total = 0;
  for (const Run& r : runs) {
    const Len length = r.end - r.start + 1;
    for (Len k = 1; 2 * k * r.period <= length; ++k) {
      total += static_cast<std::uint64_t>(length - 2 * k * r.period + 1);
    }
  }
  return total;
}

std::uint64_t count_square_occurrences(const Text& t) {
  return square_occurrences_from_runs(compute_runs(t));
}

}  // namespace nclce

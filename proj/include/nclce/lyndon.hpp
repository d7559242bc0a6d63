#pragma once

#include <cstdint>
#include <vector>

#include "nclce/nc_lce.hpp"
#include "nclce/text.hpp"

namespace nclce {

// Full binary tree of intervals over the sentinel-prefixed text: the root
// covers [0, n] where position 0 stands for the virtual smallest symbol.
// Children of an internal node [a, b] partition it as [a, m] and [m+1, b];
// the intervals form a laminar family.
class LyndonTree {
 public:
  struct Node {
    Interval interval;
    std::int32_t left = -1;
    std::int32_t right = -1;
  };

  LyndonTree(SymbolOrder order, std::vector<Node> nodes, std::int32_t root)
      : order_(order), nodes_(std::move(nodes)), root_(root) {}

  SymbolOrder order() const { return order_; }
  std::int32_t root() const { return root_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }

  // All node intervals, each exactly once, parents before children.
  std::vector<Interval> preorder_intervals() const;

  // Structural equality: same order, same shape, same intervals.
  friend bool operator==(const LyndonTree& lhs, const LyndonTree& rhs);

 private:
  SymbolOrder order_;
  std::vector<Node> nodes_;
  std::int32_t root_;
};

inline std::vector<Interval> tree_nodes(const LyndonTree& tree) {
  return tree.preorder_intervals();
}

// Right-to-left stack construction. The backend must be fresh and built over
// the same Text object; the LCE queries it receives are non-crossing, so a
// strict backend never trips.
LyndonTree lyndon_tree(const Text& t, SymbolOrder ord, NcLceStructure& lce_backend);

LyndonTree lyndon_tree(const Text& t, SymbolOrder ord);

}  // namespace nclce

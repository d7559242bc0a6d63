#include "nclce/lyndon.hpp"

#include <cassert>
#include <stdexcept>

namespace nclce {

std::vector<Interval> LyndonTree::preorder_intervals() const {
  std::vector<Interval> out;
  out.reserve(nodes_.size());
  std::vector<std::int32_t> stack;
  if (root_ >= 0) stack.push_back(root_);
  while (!stack.empty()) {
    const Node& node = nodes_[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    out.push_back(node.interval);
    if (node.right >= 0) stack.push_back(node.right);
    if (node.left >= 0) stack.push_back(node.left);
  }
  return out;
}

bool operator==(const LyndonTree& lhs, const LyndonTree& rhs) {
  if (lhs.order_ != rhs.order_ || lhs.nodes_.size() != rhs.nodes_.size()) return false;
  std::vector<std::pair<std::int32_t, std::int32_t>> stack{{lhs.root_, rhs.root_}};
  while (!stack.empty()) {
    const auto [li, ri] = stack.back();
    stack.pop_back();
    if ((li < 0) != (ri < 0)) return false;
    if (li < 0) continue;
    const auto& ln = lhs.nodes_[static_cast<std::size_t>(li)];
    const auto& rn = rhs.nodes_[static_cast<std::size_t>(ri)];
    if (ln.interval != rn.interval) return false;
    stack.push_back({ln.left, rn.left});
    stack.push_back({ln.right, rn.right});
  }
  return true;
}

LyndonTree lyndon_tree(const Text& t, SymbolOrder ord, NcLceStructure& lce_backend) {
  if (&lce_backend.text() != &t) {
    throw std::invalid_argument("lyndon_tree: backend built over a different text");
  }
  if (!lce_backend.fresh()) {
    throw std::invalid_argument("lyndon_tree: backend already used");
  }
  const Len n = t.size();
  std::vector<LyndonTree::Node> nodes;
  nodes.reserve(static_cast<std::size_t>(2 * (n + 1)));
  const auto make = [&nodes](Interval iv, std::int32_t l, std::int32_t r) {
    nodes.push_back({iv, l, r});
    return static_cast<std::int32_t>(nodes.size() - 1);
  };

  // Stack roots partition [k, n]; back() holds the leftmost interval.
  std::vector<std::int32_t> stack;
  for (Pos k = n; k >= 1; --k) {
    stack.push_back(make({k, k}, -1, -1));
    while (stack.size() >= 2) {
      const std::int32_t top = stack[stack.size() - 1];
      const std::int32_t next = stack[stack.size() - 2];
      const Interval next_iv = nodes[static_cast<std::size_t>(next)].interval;
      assert(nodes[static_cast<std::size_t>(top)].interval.lo == k &&
             next_iv.lo == nodes[static_cast<std::size_t>(top)].interval.hi + 1);
      // Merge while the left factor is the smaller one; the comparison is the
      // suffix comparison at (k, next.lo), resolved by one LCE query plus the
      // first mismatching symbol (boundary symbols follow the prefix rule).
      const Len c = lce_backend.lce(k, next_iv.lo);
      if (t.compare_at(k + c, next_iv.lo + c, ord) != std::strong_ordering::less) break;
      stack.pop_back();
      stack.pop_back();
      stack.push_back(make({k, next_iv.hi}, top, next));
    }
  }

  // The virtual position-0 sentinel is smaller than every suffix, so it
  // merges unconditionally with the remaining roots, left to right.
  std::int32_t root = make({0, 0}, -1, -1);
  for (std::size_t i = stack.size(); i-- > 0;) {
    const Interval iv = nodes[static_cast<std::size_t>(stack[i])].interval;
    root = make({0, iv.hi}, root, stack[i]);
  }
  return LyndonTree(ord, std::move(nodes), root);
}

LyndonTree lyndon_tree(const Text& t, SymbolOrder ord) {
  NcLceStructure backend(t);
  return lyndon_tree(t, ord, backend);
}

}  // namespace nclce

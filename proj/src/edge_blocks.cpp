#include "edgeblocks/edge_blocks.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "edgeblocks/errors.hpp"

namespace edgeblocks {

std::vector<VertexSet> EdgeBlockHierarchy::k_blocks(long long k) const {
  if (k < 1) throw precondition_error("k must be >= 1");
  std::vector<VertexSet> out;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int idx = stack.back();
    stack.pop_back();
    const EdgeBlockNode& node = nodes[idx];
    if (!node.k_hi.has_value() || k <= *node.k_hi) {
      out.push_back(node.set);
    } else {
      for (int child : node.children) stack.push_back(child);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeBlockHierarchy block_hierarchy(const Multigraph& g) {
  return block_hierarchy(g, gomory_hu(g));
}

EdgeBlockHierarchy block_hierarchy(const Multigraph& g, const GomoryHuTree& tree) {
  if (!is_connected(g)) throw precondition_error("block_hierarchy needs a connected graph");
  const int n = g.vertex_count();

  EdgeBlockHierarchy h;
  if (n == 1) {
    h.nodes.push_back({g.all_vertices(), 1, std::nullopt, -1, {}});
    h.max_level = 1;
    return h;
  }

  long long max_weight = 0;
  for (const auto& e : tree.edges()) max_weight = std::max(max_weight, e.weight);
  h.max_level = max_weight + 1;

  // Recursive thresholding of the tree. A block stays whole while k does not
  // exceed the minimum tree-edge weight inside it, then splits along exactly
  // those minimum edges.
  struct Frame {
    std::vector<int> members;
    long long k_lo;
    int parent;
  };
  std::vector<Frame> work{{std::vector<int>(), 1, -1}};
  work[0].members.resize(n);
  for (int v = 0; v < n; ++v) work[0].members[v] = v;

  while (!work.empty()) {
    Frame frame = std::move(work.back());
    work.pop_back();

    int index = static_cast<int>(h.nodes.size());
    VertexSet set(n, frame.members);
    if (frame.parent >= 0) h.nodes[frame.parent].children.push_back(index);

    if (frame.members.size() == 1) {
      h.nodes.push_back({std::move(set), frame.k_lo, std::nullopt, frame.parent, {}});
      continue;
    }

    std::vector<char> inside(n, 0);
    for (int v : frame.members) inside[v] = 1;
    long long min_weight = std::numeric_limits<long long>::max();
    for (const auto& e : tree.edges())
      if (inside[e.u] && inside[e.v]) min_weight = std::min(min_weight, e.weight);
    if (min_weight == std::numeric_limits<long long>::max())
      throw internal_invariant_error("block does not induce a connected tree piece");

    h.nodes.push_back({std::move(set), frame.k_lo, min_weight, frame.parent, {}});

    // components after deleting the minimum-weight edges
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : tree.edges()) {
      if (inside[e.u] && inside[e.v] && e.weight > min_weight) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
      }
    }
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> pieces;
    for (int start : frame.members) {
      if (seen[start]) continue;
      std::vector<int> piece, stack{start};
      seen[start] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        piece.push_back(v);
        for (int w : adj[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
      std::sort(piece.begin(), piece.end());
      pieces.push_back(std::move(piece));
    }
    if (pieces.size() < 2)
      throw internal_invariant_error("threshold split produced a single piece");
    // canonical child order; pushed reversed so the stack pops them in order
    std::sort(pieces.begin(), pieces.end(), [n](const auto& a, const auto& b) {
      return VertexSet(n, a) < VertexSet(n, b);
    });
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
      work.push_back({std::move(*it), min_weight + 1, index});
  }
  return h;
}

std::string BlockPair::to_string() const {
  return "(" + beta1.to_string() + "," + beta2.to_string() + ")/" + std::to_string(order);
}

namespace {

void enumerate_pairs(const EdgeBlockHierarchy& h, const Multigraph& g, const GomoryHuTree& tree,
                     std::optional<long long> level_filter,
                     const std::function<void(const BlockPair&)>& fn) {
  const auto& nodes = h.nodes;
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      const VertexSet& a = nodes[i].set;
      const VertexSet& b = nodes[j].set;
      if (a.intersects(b)) continue;  // laminar: nested blocks are never a pair

      long long order = tree.lambda(a.members().front(), b.members().front());
      if (level_filter && order != *level_filter) continue;

      // order must be the same for every representative choice; spot-check
      // the whole product when small, a corner sample otherwise
      const size_t limit = 8;
      for (size_t x = 0; x < std::min(a.members().size(), limit); ++x)
        for (size_t y = 0; y < std::min(b.members().size(), limit); ++y)
          if (tree.lambda(a.members()[x], b.members()[y]) != order)
            throw internal_invariant_error("pair order is not constant over " +
                                           a.to_string() + " x " + b.to_string());
      if (order >= nodes[i].k_lo || order >= nodes[j].k_lo)
        throw internal_invariant_error("pair order reaches a block's validity range");

      BlockPair pair{a, b, order};
      if (pair.beta2 < pair.beta1) std::swap(pair.beta1, pair.beta2);
      fn(pair);
    }
  }
  (void)g;
}

}  // namespace

std::vector<BlockPair> block_pairs(const EdgeBlockHierarchy& h, const Multigraph& g) {
  return block_pairs(h, g, gomory_hu(g));
}

std::vector<BlockPair> block_pairs(const EdgeBlockHierarchy& h, const Multigraph& g,
                                   const GomoryHuTree& tree) {
  std::vector<BlockPair> out;
  enumerate_pairs(h, g, tree, std::nullopt, [&](const BlockPair& p) { out.push_back(p); });
  std::sort(out.begin(), out.end(), [](const BlockPair& x, const BlockPair& y) {
    return std::tie(x.order, x.beta1, x.beta2) < std::tie(y.order, y.beta1, y.beta2);
  });
  return out;
}

void for_each_block_pair_at_level(const EdgeBlockHierarchy& h, const Multigraph& g,
                                  const GomoryHuTree& tree, long long level,
                                  const std::function<void(const BlockPair&)>& fn) {
  std::vector<BlockPair> out;
  enumerate_pairs(h, g, tree, level, [&](const BlockPair& p) { out.push_back(p); });
  std::sort(out.begin(), out.end(), [](const BlockPair& x, const BlockPair& y) {
    return std::tie(x.beta1, x.beta2) < std::tie(y.beta1, y.beta2);
  });
  for (const BlockPair& p : out) fn(p);
}

}  // namespace edgeblocks

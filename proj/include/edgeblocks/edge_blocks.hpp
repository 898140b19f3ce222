#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edgeblocks/mincut.hpp"
#include "edgeblocks/multigraph.hpp"
#include "edgeblocks/vertex_set.hpp"

namespace edgeblocks {

// One node of the block forest: a vertex set that is a k-edge-block exactly
// for k_lo <= k <= k_hi. Singletons never split again, so their upper end is
// unbounded (represented as an empty optional).
struct EdgeBlockNode {
  VertexSet set;
  long long k_lo = 1;
  std::optional<long long> k_hi;  // nullopt = unbounded
  int parent = -1;
  std::vector<int> children;
};

// The laminar family of k-edge-blocks over all k at once. Node 0 is the
// whole vertex set with k_lo = 1.
struct EdgeBlockHierarchy {
  std::vector<EdgeBlockNode> nodes;
  long long max_level = 1;  // 1 + max pairwise λ

  // The partition of V into k-edge-blocks, canonical order.
  std::vector<VertexSet> k_blocks(long long k) const;
};

// Thresholds the contraction Gomory–Hu tree: the k-edge-blocks are the
// vertex classes connected by tree edges of weight >= k. Requires a
// connected graph.
EdgeBlockHierarchy block_hierarchy(const Multigraph& g);

// Variant reusing an already-built tree.
EdgeBlockHierarchy block_hierarchy(const Multigraph& g, const GomoryHuTree& tree);

// Two disjoint edge-blocks and the order λ(u,v) shared by all u in one and
// v in the other. beta1 < beta2 canonically.
struct BlockPair {
  VertexSet beta1;
  VertexSet beta2;
  long long order = 0;

  bool operator==(const BlockPair&) const = default;
  std::string to_string() const;
};

// All unordered pairs of disjoint blocks, ascending (order, beta1, beta2).
// Each pair's order is computed from canonical representatives and its
// constancy over the whole product is verified against the tree.
std::vector<BlockPair> block_pairs(const EdgeBlockHierarchy& h, const Multigraph& g);
std::vector<BlockPair> block_pairs(const EdgeBlockHierarchy& h, const Multigraph& g,
                                   const GomoryHuTree& tree);

// Per-level enumeration used by the nested-set builder; calls fn for every
// pair of the given order.
void for_each_block_pair_at_level(const EdgeBlockHierarchy& h, const Multigraph& g,
                                  const GomoryHuTree& tree, long long level,
                                  const std::function<void(const BlockPair&)>& fn);

}  // namespace edgeblocks

#pragma once

#include <string>
#include <vector>

#include "edgeblocks/multigraph.hpp"
#include "edgeblocks/separation.hpp"
#include "edgeblocks/vertex_set.hpp"

namespace edgeblocks {

// A tree, a near-partition of V into possibly empty parts (one per node),
// and the bijection between tree edges and the separations they induce.
struct TreeCutDecomposition {
  struct Edge {
    int a = 0;
    int b = 0;
    CutSeparation separation;
  };

  int vertex_count = 0;
  std::vector<VertexSet> parts;  // node id -> part
  std::vector<Edge> edges;
  int root_node = 0;

  int node_count() const { return static_cast<int>(parts.size()); }
  // Node ids on the `a`-side / `b`-side of tree edge e.
  std::vector<int> side_nodes(int edge_index, bool a_side) const;
};

// Validates near-partition, density (every tree edge lies on a path between
// two nodes with non-empty parts; violations are rejected with the witness
// edge), the edge map, and the part identity part(t) = ⋂ far sides over the
// edges at t. Throws precondition_error with a witness on failure.
void validate_tree_cut(const Multigraph& g, const TreeCutDecomposition& d);

// Materializes a nested set of bonds as the fundamental cuts of a tree-cut
// decomposition: orient every separation away from the root vertex, build
// the laminar forest of the non-root sides, and peel parts. The result's
// fundamental cuts equal M exactly (asserted). Empty M gives the single-node
// decomposition with part V.
TreeCutDecomposition build_tree_cut(const Multigraph& g, const std::vector<CutSeparation>& M,
                                    int root_vertex);

// The separations induced by deleting one tree edge each; asserted equal to
// the stored edge map.
std::vector<CutSeparation> fundamental_cuts(const Multigraph& g, const TreeCutDecomposition& d);

struct KBlockCheck {
  bool ok = false;
  std::vector<VertexSet> missing_blocks;  // k-edge-blocks that are not parts
  std::vector<VertexSet> extra_parts;     // non-empty parts that are not k-edge-blocks
};

// Do the non-empty parts coincide with the k-edge-blocks of g?
KBlockCheck verify_k_block_decomposition(const Multigraph& g, const TreeCutDecomposition& d,
                                         long long k);

// DOT rendering: one ellipse per node listing its part ("∅" when empty),
// edges annotated with the cut order.
std::string tree_cut_to_dot(const Multigraph& g, const TreeCutDecomposition& d);

}  // namespace edgeblocks

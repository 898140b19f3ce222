#pragma once

#include <vector>

#include "edgeblocks/multigraph.hpp"
#include "edgeblocks/separation.hpp"
#include "edgeblocks/vertex_set.hpp"

namespace edgeblocks {

inline constexpr long long kDefaultEnumerationCap = 100000;

struct MaxFlowResult {
  long long value = 0;
  // Vertices reachable from s in the final residual network: the unique
  // inclusion-minimal minimum s-side.
  VertexSet source_side;
};

// Edmonds–Karp on the multiplicity capacities. Deterministic.
MaxFlowResult max_flow(const Multigraph& g, int s, int t);

// Pairwise edge connectivity λ(u,v) by a single max-flow run.
long long lambda(const Multigraph& g, int u, int v);

struct MinCutResult {
  long long value = 0;
  CutSeparation separation;  // S ⊆ one side, T ⊆ other, order = value
};

// Minimum cut between two disjoint non-empty vertex sets. The returned
// separation is pruned toward connected sides: components of a side that
// miss its terminal set are moved across (smallest canonical component
// first); for minimum cuts this never increases the order. Whenever each
// terminal set lies inside a single component of its side — always the case
// for single vertices and for edge-blocks — both sides come out connected.
MinCutResult min_cut(const Multigraph& g, const VertexSet& S, const VertexSet& T);

struct GomoryHuEdge {
  int u = 0;
  int v = 0;
  long long weight = 0;
};

// Weighted tree on the graph's vertices encoding all pairwise minimum cut
// values as path minima. Built with the contraction scheme, so every tree
// edge's fundamental bipartition induces a minimum cut between its
// endpoints of exactly the edge weight, with connected sides.
class GomoryHuTree {
 public:
  GomoryHuTree() = default;
  GomoryHuTree(int n, std::vector<GomoryHuEdge> edges);

  int vertex_count() const { return n_; }
  const std::vector<GomoryHuEdge>& edges() const { return edges_; }

  // min edge weight on the tree path = λ(u,v)
  long long lambda(int u, int v) const;

  // The bipartition obtained by deleting one tree edge.
  VertexSet fundamental_side(int edge_index) const;

 private:
  int n_ = 0;
  std::vector<GomoryHuEdge> edges_;
  std::vector<std::vector<std::pair<int, long long>>> adj_;  // (neighbour, weight)
};

GomoryHuTree gomory_hu(const Multigraph& g);

// All cut-separations {A,B} with S ⊆ A, T ⊆ B, order equal to the minimum
// cut value, and both sides connected. Complete: enumerates the closed sets
// of the condensed residual network of one maximum flow, then filters to
// connected sides. Aborts with enumeration_cap_error beyond `cap` closed
// sets.
std::vector<CutSeparation> enumerate_min_separations(const Multigraph& g, const VertexSet& S,
                                                     const VertexSet& T,
                                                     long long cap = kDefaultEnumerationCap);

}  // namespace edgeblocks

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edgeblocks/vertex_set.hpp"

namespace edgeblocks {

// One distinct vertex pair with its parallel-edge multiplicity. u < v always.
struct EdgeRec {
  int u = 0;
  int v = 0;
  long long mult = 1;

  auto operator<=>(const EdgeRec&) const = default;
};

// Finite undirected multigraph without loops. Vertices are 0..n-1,
// multiplicities count parallel edges. Immutable after construction; all
// operations on it are pure functions.
class Multigraph {
 public:
  struct EdgeSpec {
    int u;
    int v;
    long long mult = 1;
  };

  Multigraph() = default;
  Multigraph(int n, const std::vector<EdgeSpec>& edges, std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  const std::vector<EdgeRec>& edges() const { return edges_; }
  long long total_multiplicity() const { return total_mult_; }
  long long degree(int v) const;

  // Adjacency as (neighbour, multiplicity) lists; rows sorted by neighbour.
  const std::vector<std::vector<std::pair<int, long long>>>& adjacency() const { return adj_; }

  // Label of v, or its index rendered as text when unlabeled.
  std::string display(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  VertexSet all_vertices() const;

 private:
  int n_ = 0;
  std::vector<EdgeRec> edges_;
  std::vector<std::vector<std::pair<int, long long>>> adj_;
  std::vector<std::string> labels_;
  long long total_mult_ = 0;
};

// Maximal connected vertex classes of g, in canonical order. Tolerates
// disconnected input.
std::vector<VertexSet> components(const Multigraph& g);

// Connected classes of the subgraph induced by `within`.
std::vector<VertexSet> components_within(const Multigraph& g, const VertexSet& within);

bool is_connected(const Multigraph& g);

struct Contraction {
  Multigraph graph;
  std::vector<int> old_to_new;  // size = original vertex count
};

// Collapses each part to one vertex (unlisted vertices stay singletons).
// Parallel edges accumulate; loops created by contraction are dropped. New
// identifiers are assigned by ascending smallest original member.
Contraction contract(const Multigraph& g, const std::vector<VertexSet>& parts);

struct CutEdges {
  std::vector<EdgeRec> edges;  // crossing pairs, canonical order
  long long total = 0;         // counts multiplicity
};

// The cut induced by a non-empty proper vertex subset.
CutEdges cut_edges(const Multigraph& g, const VertexSet& side);

// Total multiplicity of the induced cut, without materializing the edges.
long long cut_order(const Multigraph& g, const VertexSet& side);

// Graph-document I/O. Format:
//   {"vertices": n, "edges": [[u,v] | [u,v,mult]], "labels": {"0": "name"}}
// Duplicate pairs aggregate by summing multiplicities.
Multigraph load_graph(const std::string& json_text);
Multigraph load_graph_file(const std::string& path);
std::string graph_to_json(const Multigraph& g);

}  // namespace edgeblocks

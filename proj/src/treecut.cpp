#include "edgeblocks/treecut.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "edgeblocks/edge_blocks.hpp"
#include "edgeblocks/errors.hpp"

namespace edgeblocks {

std::vector<int> TreeCutDecomposition::side_nodes(int edge_index, bool a_side) const {
  if (edge_index < 0 || edge_index >= static_cast<int>(edges.size()))
    throw precondition_error("tree edge index out of range");
  std::vector<std::vector<int>> adj(parts.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    if (static_cast<int>(e) == edge_index) continue;
    adj[edges[e].a].push_back(edges[e].b);
    adj[edges[e].b].push_back(edges[e].a);
  }
  int start = a_side ? edges[edge_index].a : edges[edge_index].b;
  std::vector<char> seen(parts.size(), 0);
  seen[start] = 1;
  std::vector<int> stack{start}, out;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    out.push_back(t);
    for (int u : adj[t])
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

VertexSet union_of_parts(const TreeCutDecomposition& d, const std::vector<int>& nodes) {
  VertexSet out(d.vertex_count);
  for (int t : nodes) out = out.set_union(d.parts[t]);
  return out;
}

}  // namespace

void validate_tree_cut(const Multigraph& g, const TreeCutDecomposition& d) {
  if (d.vertex_count != g.vertex_count())
    throw precondition_error("decomposition built for a different graph");
  if (d.parts.empty()) throw precondition_error("decomposition has no nodes");
  if (d.edges.size() + 1 != d.parts.size())
    throw precondition_error("decomposition tree must have node count - 1 edges");
  if (d.root_node < 0 || d.root_node >= d.node_count())
    throw precondition_error("root node out of range");

  // tree shape: node count - 1 edges and connected
  {
    std::vector<std::vector<int>> adj(d.parts.size());
    for (const auto& e : d.edges) {
      if (e.a < 0 || e.a >= d.node_count() || e.b < 0 || e.b >= d.node_count() || e.a == e.b)
        throw precondition_error("bad tree edge endpoints");
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
    std::vector<char> seen(d.parts.size(), 0);
    seen[0] = 1;
    std::vector<int> stack{0};
    size_t reached = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int u : adj[t])
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached != d.parts.size())
      throw precondition_error("decomposition tree is not connected");
  }

  // near-partition: disjoint parts covering V
  std::vector<int> owner(d.vertex_count, -1);
  for (size_t t = 0; t < d.parts.size(); ++t) {
    for (int v : d.parts[t].members()) {
      if (owner[v] != -1)
        throw precondition_error("parts overlap at vertex " + std::to_string(v));
      owner[v] = static_cast<int>(t);
    }
  }
  for (int v = 0; v < d.vertex_count; ++v)
    if (owner[v] == -1)
      throw precondition_error("vertex " + std::to_string(v) + " missing from every part");

  for (size_t e = 0; e < d.edges.size(); ++e) {
    std::vector<int> a_nodes = d.side_nodes(static_cast<int>(e), true);
    VertexSet a_union = union_of_parts(d, a_nodes);
    // density: both unions non-empty means the edge lies on a path between
    // two nodes with non-empty parts
    if (a_union.empty() || a_union.full())
      throw precondition_error("density violated at tree edge " + std::to_string(e));
    CutSeparation induced(g, a_union);
    if (!(induced == d.edges[e].separation))
      throw precondition_error("edge map mismatch at tree edge " + std::to_string(e));
  }

  // part identity: part(t) = ⋂ of the t-side sets over the edges at t
  for (size_t t = 0; t < d.parts.size(); ++t) {
    VertexSet expect = g.all_vertices();
    for (size_t e = 0; e < d.edges.size(); ++e) {
      if (d.edges[e].a != static_cast<int>(t) && d.edges[e].b != static_cast<int>(t)) continue;
      bool t_on_a = d.edges[e].a == static_cast<int>(t);
      VertexSet toward_t = union_of_parts(d, d.side_nodes(static_cast<int>(e), t_on_a));
      expect = expect.set_intersection(toward_t);
    }
    if (!(expect == d.parts[t]))
      throw precondition_error("part of node " + std::to_string(t) +
                               " is not the intersection of its oriented sides");
  }
}

TreeCutDecomposition build_tree_cut(const Multigraph& g, const std::vector<CutSeparation>& M,
                                    int root_vertex) {
  const int n = g.vertex_count();
  if (root_vertex < 0 || root_vertex >= n) throw precondition_error("root vertex out of range");
  for (size_t a = 0; a < M.size(); ++a) {
    if (M[a].universe() != n) throw precondition_error("separation built for a different graph");
    if (!M[a].is_bond(g))
      throw precondition_error("member is not a bond: " + M[a].to_string());
    for (size_t b = a + 1; b < M.size(); ++b) {
      if (M[a] == M[b]) throw precondition_error("duplicate separation: " + M[a].to_string());
      if (!nested(M[a], M[b]))
        throw precondition_error("set is not nested: " + M[a].to_string() + " x " +
                                 M[b].to_string());
    }
  }

  TreeCutDecomposition d;
  d.vertex_count = n;
  if (M.empty()) {
    d.parts.push_back(g.all_vertices());
    d.root_node = 0;
    validate_tree_cut(g, d);
    return d;
  }

  // sides away from the root; distinct separations give distinct sides, and
  // nestedness makes the family laminar
  struct Entry {
    VertexSet away;
    const CutSeparation* sep;
  };
  std::vector<Entry> entries;
  entries.reserve(M.size());
  for (const CutSeparation& sep : M)
    entries.push_back({sep.side_not_containing(root_vertex), &sep});
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return x.away < y.away; });

  // parent = smallest strict superset (supersets form a chain in a laminar family)
  const int m = static_cast<int>(entries.size());
  std::vector<int> parent(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (entries[i].away.is_subset_of(entries[j].away) &&
          entries[i].away.size() < entries[j].away.size()) {
        if (parent[i] == -1 || entries[j].away.size() < entries[parent[i]].away.size())
          parent[i] = j;
      }
    }
  }

  // node 0 = root (the side of everything containing the root vertex),
  // node i+1 = entries[i]
  d.parts.assign(m + 1, VertexSet(n));
  d.root_node = 0;
  VertexSet root_part = g.all_vertices();
  std::vector<VertexSet> child_union(m, VertexSet(n));
  for (int i = 0; i < m; ++i) {
    if (parent[i] == -1)
      root_part = root_part.set_difference(entries[i].away);
    else
      child_union[parent[i]] = child_union[parent[i]].set_union(entries[i].away);
  }
  d.parts[0] = std::move(root_part);
  for (int i = 0; i < m; ++i) {
    d.parts[i + 1] = entries[i].away.set_difference(child_union[i]);
    int up = parent[i] == -1 ? 0 : parent[i] + 1;
    d.edges.push_back({i + 1, up, *entries[i].sep});
  }

  validate_tree_cut(g, d);

  std::vector<CutSeparation> cuts = fundamental_cuts(g, d);
  std::vector<CutSeparation> want = M;
  std::sort(want.begin(), want.end());
  if (cuts != want)
    throw internal_invariant_error("fundamental cuts differ from the input set");
  return d;
}

std::vector<CutSeparation> fundamental_cuts(const Multigraph& g, const TreeCutDecomposition& d) {
  std::vector<CutSeparation> out;
  out.reserve(d.edges.size());
  for (size_t e = 0; e < d.edges.size(); ++e) {
    VertexSet a_union = union_of_parts(d, d.side_nodes(static_cast<int>(e), true));
    CutSeparation sep(g, a_union);
    if (!(sep == d.edges[e].separation))
      throw internal_invariant_error("stored separation differs from the induced cut at edge " +
                                     std::to_string(e));
    out.push_back(std::move(sep));
  }
  std::sort(out.begin(), out.end());
  return out;
}

KBlockCheck verify_k_block_decomposition(const Multigraph& g, const TreeCutDecomposition& d,
                                         long long k) {
  validate_tree_cut(g, d);
  std::vector<VertexSet> parts;
  for (const VertexSet& part : d.parts)
    if (!part.empty()) parts.push_back(part);
  std::sort(parts.begin(), parts.end());

  std::vector<VertexSet> blocks = block_hierarchy(g).k_blocks(k);

  KBlockCheck check;
  std::set_difference(blocks.begin(), blocks.end(), parts.begin(), parts.end(),
                      std::back_inserter(check.missing_blocks));
  std::set_difference(parts.begin(), parts.end(), blocks.begin(), blocks.end(),
                      std::back_inserter(check.extra_parts));
  check.ok = check.missing_blocks.empty() && check.extra_parts.empty();
  return check;
}

std::string tree_cut_to_dot(const Multigraph& g, const TreeCutDecomposition& d) {
  std::ostringstream out;
  out << "graph treecut {\n  node [shape=ellipse];\n";
  for (size_t t = 0; t < d.parts.size(); ++t) {
    out << "  t" << t << " [label=\"";
    if (d.parts[t].empty()) {
      out << "∅";
    } else {
      out << "{";
      const auto& members = d.parts[t].members();
      for (size_t i = 0; i < members.size(); ++i) {
        if (i) out << ", ";
        out << g.display(members[i]);
      }
      out << "}";
    }
    out << "\"];\n";
  }
  for (const auto& e : d.edges)
    out << "  t" << e.a << " -- t" << e.b << " [label=\"order=" << e.separation.order()
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace edgeblocks

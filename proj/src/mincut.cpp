#include "edgeblocks/mincut.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <queue>

#include "edgeblocks/errors.hpp"

namespace edgeblocks {

namespace {

using Residual = std::vector<std::vector<long long>>;

Residual build_residual(const Multigraph& g) {
  const int n = g.vertex_count();
  Residual r(n, std::vector<long long>(n, 0));
  for (const auto& e : g.edges()) {
    r[e.u][e.v] += e.mult;
    r[e.v][e.u] += e.mult;
  }
  return r;
}

// Edmonds–Karp. Augmenting paths found by BFS in vertex-index order, so the
// final residual network is deterministic.
long long run_max_flow(Residual& r, int s, int t) {
  const int n = static_cast<int>(r.size());
  long long flow = 0;
  std::vector<int> parent(n);
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::deque<int> queue{s};
    while (!queue.empty() && parent[t] == -1) {
      int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (parent[v] == -1 && r[u][v] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[t] == -1) break;
    long long push = std::numeric_limits<long long>::max();
    for (int v = t; v != s; v = parent[v]) push = std::min(push, r[parent[v]][v]);
    for (int v = t; v != s; v = parent[v]) {
      r[parent[v]][v] -= push;
      r[v][parent[v]] += push;
    }
    flow += push;
  }
  return flow;
}

VertexSet residual_reachable(const Residual& r, int s) {
  const int n = static_cast<int>(r.size());
  std::vector<char> seen(n, 0);
  seen[s] = 1;
  std::vector<int> stack{s};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (!seen[v] && r[u][v] > 0) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  std::vector<int> members;
  for (int v = 0; v < n; ++v)
    if (seen[v]) members.push_back(v);
  return VertexSet(n, std::move(members));
}

void check_terminals(const Multigraph& g, const VertexSet& S, const VertexSet& T) {
  if (S.universe() != g.vertex_count() || T.universe() != g.vertex_count())
    throw precondition_error("terminal sets built for a different graph");
  if (S.empty() || T.empty()) throw precondition_error("terminal sets must be non-empty");
  if (S.intersects(T)) throw precondition_error("terminal sets must be disjoint");
}

}  // namespace

MaxFlowResult max_flow(const Multigraph& g, int s, int t) {
  const int n = g.vertex_count();
  if (s < 0 || s >= n || t < 0 || t >= n) throw precondition_error("terminal out of range");
  if (s == t) throw precondition_error("max flow needs two distinct terminals");
  Residual r = build_residual(g);
  long long value = run_max_flow(r, s, t);
  return {value, residual_reachable(r, s)};
}

long long lambda(const Multigraph& g, int u, int v) {
  if (u == v) throw precondition_error("lambda needs two distinct vertices");
  return max_flow(g, u, v).value;
}

MinCutResult min_cut(const Multigraph& g, const VertexSet& S, const VertexSet& T) {
  check_terminals(g, S, T);
  if (!is_connected(g)) throw precondition_error("min_cut needs a connected graph");

  Contraction c = contract(g, {S, T});
  int s = c.old_to_new[S.members().front()];
  int t = c.old_to_new[T.members().front()];
  MaxFlowResult flow = max_flow(c.graph, s, t);

  VertexSet side(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (flow.source_side.contains(c.old_to_new[v])) side.add(v);

  // Prune: move side components that miss their terminal set across,
  // smallest canonical component first. Minimum cuts never have such
  // components unless a terminal set itself spans several of them.
  for (;;) {
    VertexSet other = side.complement();
    std::vector<VertexSet> movable;
    for (const VertexSet& comp : components_within(g, side))
      if (!comp.intersects(S)) movable.push_back(comp);
    for (const VertexSet& comp : components_within(g, other))
      if (!comp.intersects(T)) movable.push_back(comp);
    if (movable.empty()) break;
    const VertexSet& pick = *std::min_element(movable.begin(), movable.end());
    side = pick.is_subset_of(side) ? side.set_difference(pick) : side.set_union(pick);
  }

  CutSeparation sep(g, side);
  if (sep.order() != flow.value)
    throw internal_invariant_error("pruned minimum cut changed its order: " +
                                   std::to_string(sep.order()) + " vs flow value " +
                                   std::to_string(flow.value));
  return {flow.value, std::move(sep)};
}

GomoryHuTree::GomoryHuTree(int n, std::vector<GomoryHuEdge> edges)
    : n_(n), edges_(std::move(edges)), adj_(n) {
  for (const auto& e : edges_) {
    adj_[e.u].emplace_back(e.v, e.weight);
    adj_[e.v].emplace_back(e.u, e.weight);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

long long GomoryHuTree::lambda(int u, int v) const {
  if (u == v) throw precondition_error("lambda needs two distinct vertices");
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw precondition_error("vertex out of range");
  // BFS on the tree, tracking the minimum edge weight along the way.
  std::vector<long long> best(n_, -1);
  best[u] = std::numeric_limits<long long>::max();
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == v) return best[v];
    for (const auto& [y, w] : adj_[x]) {
      if (best[y] == -1) {
        best[y] = std::min(best[x], w);
        queue.push_back(y);
      }
    }
  }
  throw internal_invariant_error("Gomory–Hu tree is not connected");
}

VertexSet GomoryHuTree::fundamental_side(int edge_index) const {
  if (edge_index < 0 || edge_index >= static_cast<int>(edges_.size()))
    throw precondition_error("tree edge index out of range");
  const GomoryHuEdge& cut = edges_[edge_index];
  std::vector<char> seen(n_, 0);
  seen[cut.u] = 1;
  std::vector<int> stack{cut.u};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& [y, w] : adj_[x]) {
      (void)w;
      if ((x == cut.u && y == cut.v) || (x == cut.v && y == cut.u)) continue;
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::vector<int> members;
  for (int v = 0; v < n_; ++v)
    if (seen[v]) members.push_back(v);
  return VertexSet(n_, std::move(members));
}

GomoryHuTree gomory_hu(const Multigraph& g) {
  if (!is_connected(g)) throw precondition_error("gomory_hu needs a connected graph");
  const int n = g.vertex_count();
  if (n == 1) return GomoryHuTree(1, {});

  // Classic contraction scheme: tree nodes are vertex groups; repeatedly
  // split a group by a minimum cut computed in the graph with every other
  // tree branch contracted to a single vertex.
  std::vector<std::vector<int>> groups;
  {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    groups.push_back(std::move(all));
  }
  struct TEdge {
    int a, b;
    long long w;
  };
  std::vector<TEdge> tedges;

  for (;;) {
    int gi = -1;
    for (size_t i = 0; i < groups.size(); ++i) {
      if (groups[i].size() < 2) continue;
      if (gi == -1 || groups[i].front() < groups[gi].front()) gi = static_cast<int>(i);
    }
    if (gi == -1) break;

    // Branches of the current tree hanging off the chosen group.
    std::vector<std::vector<int>> nbr;  // adjacency over group indices
    nbr.resize(groups.size());
    for (const auto& e : tedges) {
      nbr[e.a].push_back(e.b);
      nbr[e.b].push_back(e.a);
    }
    std::vector<int> branch_of(groups.size(), -1);
    int branch_count = 0;
    for (size_t start = 0; start < groups.size(); ++start) {
      if (static_cast<int>(start) == gi || branch_of[start] != -1) continue;
      std::vector<int> stack{static_cast<int>(start)};
      branch_of[start] = branch_count;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : nbr[x]) {
          if (y != gi && branch_of[y] == -1) {
            branch_of[y] = branch_count;
            stack.push_back(y);
          }
        }
      }
      ++branch_count;
    }
    std::vector<VertexSet> parts(branch_count, VertexSet(n));
    for (size_t i = 0; i < groups.size(); ++i) {
      if (branch_of[i] == -1) continue;
      for (int v : groups[i]) parts[branch_of[i]].add(v);
    }

    Contraction c = contract(g, parts);
    int s = groups[gi][0];
    int t = groups[gi][1];
    MaxFlowResult flow = max_flow(c.graph, c.old_to_new[s], c.old_to_new[t]);

    std::vector<int> ga, gb;
    for (int v : groups[gi])
      (flow.source_side.contains(c.old_to_new[v]) ? ga : gb).push_back(v);

    int gb_index = static_cast<int>(groups.size());
    groups[gi] = std::move(ga);
    groups.push_back(std::move(gb));
    for (auto& e : tedges) {
      int other = e.a == gi ? e.b : (e.b == gi ? e.a : -1);
      if (other == -1) continue;
      if (groups[other].empty())
        throw internal_invariant_error("empty group in Gomory–Hu construction");
      int branch_rep = groups[other].front();
      // Representative works because group vertex sets never change sides
      // of the computed cut other than as whole contracted branches.
      bool on_source_side = flow.source_side.contains(c.old_to_new[branch_rep]);
      if (!on_source_side) {
        if (e.a == gi)
          e.a = gb_index;
        else
          e.b = gb_index;
      }
    }
    tedges.push_back({gi, gb_index, flow.value});
  }

  std::vector<GomoryHuEdge> edges;
  for (const auto& e : tedges) {
    int u = groups[e.a].front();
    int v = groups[e.b].front();
    edges.push_back({std::min(u, v), std::max(u, v), e.w});
  }
  std::sort(edges.begin(), edges.end(),
            [](const GomoryHuEdge& x, const GomoryHuEdge& y) {
              return std::tie(x.u, x.v) < std::tie(y.u, y.v);
            });
  return GomoryHuTree(n, std::move(edges));
}

namespace {

// Kosaraju over the residual arcs, deterministic by vertex index.
std::vector<int> strongly_connected_components(const Residual& r, int& count) {
  const int n = static_cast<int>(r.size());
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // Iterative DFS recording finish order.
    std::vector<std::pair<int, int>> stack{{start, 0}};
    seen[start] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      bool descended = false;
      while (next < n) {
        int v = next++;
        if (r[u][v] > 0 && !seen[v]) {
          seen[v] = 1;
          stack.emplace_back(v, 0);
          descended = true;
          break;
        }
      }
      if (!descended && (stack.back().second >= n)) {
        order.push_back(stack.back().first);
        stack.pop_back();
      }
    }
  }
  std::vector<int> scc(n, -1);
  count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (scc[*it] != -1) continue;
    std::vector<int> stack{*it};
    scc[*it] = count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (r[v][u] > 0 && scc[v] == -1) {
          scc[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  return scc;
}

}  // namespace

std::vector<CutSeparation> enumerate_min_separations(const Multigraph& g, const VertexSet& S,
                                                     const VertexSet& T, long long cap) {
  check_terminals(g, S, T);
  if (!is_connected(g)) throw precondition_error("enumeration needs a connected graph");

  Contraction c = contract(g, {S, T});
  const int cn = c.graph.vertex_count();
  int s = c.old_to_new[S.members().front()];
  int t = c.old_to_new[T.members().front()];

  Residual r = build_residual(c.graph);
  long long value = run_max_flow(r, s, t);

  int scc_count = 0;
  std::vector<int> scc_raw = strongly_connected_components(r, scc_count);
  // Relabel components by their smallest contracted vertex, for determinism.
  std::vector<int> scc_min(scc_count, cn);
  for (int v = 0; v < cn; ++v) scc_min[scc_raw[v]] = std::min(scc_min[scc_raw[v]], v);
  std::vector<int> by_min(scc_count);
  for (int i = 0; i < scc_count; ++i) by_min[i] = i;
  std::sort(by_min.begin(), by_min.end(), [&](int a, int b) { return scc_min[a] < scc_min[b]; });
  std::vector<int> relabel(scc_count);
  for (int i = 0; i < scc_count; ++i) relabel[by_min[i]] = i;
  std::vector<int> scc(cn);
  for (int v = 0; v < cn; ++v) scc[v] = relabel[scc_raw[v]];

  std::vector<std::vector<char>> dag(scc_count, std::vector<char>(scc_count, 0));
  for (int u = 0; u < cn; ++u)
    for (int v = 0; v < cn; ++v)
      if (r[u][v] > 0 && scc[u] != scc[v]) dag[scc[u]][scc[v]] = 1;

  // Forward closure of s's component and backward closure of t's; everything
  // else is free to include as long as the chosen set is successor-closed.
  auto closure = [&](int from, bool forward) {
    std::vector<char> seen(scc_count, 0);
    seen[from] = 1;
    std::vector<int> stack{from};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < scc_count; ++y) {
        bool arc = forward ? dag[x][y] : dag[y][x];
        if (arc && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return seen;
  };
  std::vector<char> in_source = closure(scc[s], true);
  std::vector<char> to_sink = closure(scc[t], false);
  if (in_source[scc[t]])
    throw internal_invariant_error("residual path from source to sink after max flow");

  std::vector<int> free_nodes;
  for (int i = 0; i < scc_count; ++i)
    if (!in_source[i] && !to_sink[i]) free_nodes.push_back(i);

  // Order free components successors-first so each inclusion decision only
  // looks at already-decided nodes.
  const int m = static_cast<int>(free_nodes.size());
  std::vector<int> pos(scc_count, -1);
  std::vector<int> topo;
  {
    std::vector<int> out_deg(m, 0);
    std::vector<std::vector<int>> preds(m);
    std::vector<int> idx_of(scc_count, -1);
    for (int i = 0; i < m; ++i) idx_of[free_nodes[i]] = i;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && dag[free_nodes[i]][free_nodes[j]]) {
          ++out_deg[i];
          preds[j].push_back(i);
        }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < m; ++i)
      if (out_deg[i] == 0) ready.push(i);
    while (!ready.empty()) {
      int i = ready.top();
      ready.pop();
      topo.push_back(i);
      for (int p : preds[i])
        if (--out_deg[p] == 0) ready.push(p);
    }
    if (static_cast<int>(topo.size()) != m)
      throw internal_invariant_error("residual condensation is not acyclic");
    for (int k = 0; k < m; ++k) pos[free_nodes[topo[k]]] = k;
  }

  std::vector<char> chosen(m, 0);
  std::vector<CutSeparation> result;
  long long enumerated = 0;

  // Membership of contracted vertices per closed set, reused across leaves.
  auto emit = [&]() {
    if (++enumerated > cap)
      throw enumeration_cap_error("minimum-separation enumeration exceeded cap of " +
                                  std::to_string(cap));
    VertexSet side(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      int comp = scc[c.old_to_new[v]];
      bool in = in_source[comp] || (pos[comp] != -1 && chosen[pos[comp]]);
      if (in) side.add(v);
    }
    CutSeparation sep(g, side);
    if (sep.order() != value)
      throw internal_invariant_error("closed set produced a non-minimum cut");
    if (sep.is_bond(g)) result.push_back(std::move(sep));
  };

  // Depth-first over include/skip decisions in successors-first order.
  auto rec = [&](auto&& self, int k) -> void {
    if (k == m) {
      emit();
      return;
    }
    int node = free_nodes[topo[k]];
    // skip
    self(self, k + 1);
    // include, if all free successors are included
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      int succ = free_nodes[j];
      if (dag[node][succ] && !chosen[pos[succ]]) ok = false;
    }
    if (ok) {
      chosen[k] = 1;
      self(self, k + 1);
      chosen[k] = 0;
    }
  };
  rec(rec, 0);

  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace edgeblocks

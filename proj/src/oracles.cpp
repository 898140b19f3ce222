#include "edgeblocks/oracles.hpp"

#include <algorithm>
#include <limits>

#include "edgeblocks/errors.hpp"

namespace edgeblocks {

namespace {

void check_guard(const Multigraph& g) {
  if (g.vertex_count() > kOracleGuard)
    throw precondition_error("oracle guard: brute force limited to " +
                             std::to_string(kOracleGuard) + " vertices, got " +
                             std::to_string(g.vertex_count()));
}

// Visits every bipartition (as the side containing vertex 0) exactly once.
template <typename Fn>
void for_each_bipartition(const Multigraph& g, Fn&& fn) {
  const int n = g.vertex_count();
  if (n < 2) return;
  // vertex 0 fixed on the inside; free bits are vertices 1..n-1
  const unsigned long long limit = 1ULL << (n - 1);
  for (unsigned long long mask = 0; mask + 1 < limit; ++mask) {
    std::vector<int> side{0};
    for (int v = 1; v < n; ++v)
      if (mask & (1ULL << (v - 1))) side.push_back(v);
    fn(VertexSet(n, std::move(side)));
  }
}

long long order_of(const Multigraph& g, const VertexSet& side) { return cut_order(g, side); }

}  // namespace

long long brute_lambda(const Multigraph& g, int u, int v) {
  check_guard(g);
  if (u == v) throw precondition_error("brute_lambda needs two distinct vertices");
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw precondition_error("vertex out of range");
  long long best = std::numeric_limits<long long>::max();
  for_each_bipartition(g, [&](const VertexSet& side) {
    if (side.contains(u) == side.contains(v)) return;
    best = std::min(best, order_of(g, side));
  });
  return best;
}

std::vector<VertexSet> brute_blocks(const Multigraph& g, long long k) {
  check_guard(g);
  const int n = g.vertex_count();
  std::vector<std::vector<char>> related(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u) related[u][u] = 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      related[u][v] = related[v][u] = (k <= 0) || (brute_lambda(g, u, v) >= k);

  // transitivity must hold; a violation would mean λ is not what we think
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (related[a][b] && related[b][c] && !related[a][c])
          throw internal_invariant_error("(<k)-inseparability failed transitivity");

  std::vector<char> assigned(n, 0);
  std::vector<VertexSet> classes;
  for (int v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    std::vector<int> cls;
    for (int w = 0; w < n; ++w) {
      if (related[v][w]) {
        cls.push_back(w);
        assigned[w] = 1;
      }
    }
    classes.emplace_back(n, std::move(cls));
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

long long brute_min_cut_value(const Multigraph& g, const VertexSet& S, const VertexSet& T) {
  check_guard(g);
  long long best = std::numeric_limits<long long>::max();
  for_each_bipartition(g, [&](const VertexSet& side) {
    bool separates = (S.is_subset_of(side) && !T.intersects(side)) ||
                     (T.is_subset_of(side) && !S.intersects(side));
    if (!separates) return;
    best = std::min(best, order_of(g, side));
  });
  if (best == std::numeric_limits<long long>::max())
    throw precondition_error("no bipartition separates the given sets");
  return best;
}

std::vector<CutSeparation> brute_min_separations(const Multigraph& g, const VertexSet& S,
                                                 const VertexSet& T, bool bonds_only) {
  long long best = brute_min_cut_value(g, S, T);
  std::vector<CutSeparation> out;
  for_each_bipartition(g, [&](const VertexSet& side) {
    bool separates = (S.is_subset_of(side) && !T.intersects(side)) ||
                     (T.is_subset_of(side) && !S.intersects(side));
    if (!separates) return;
    if (order_of(g, side) != best) return;
    CutSeparation sep(g, side);
    if (bonds_only && !sep.is_bond(g)) return;
    out.push_back(std::move(sep));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CutSeparation> brute_efficient_distinguishers(const Multigraph& g,
                                                          const VertexSet& beta1,
                                                          const VertexSet& beta2) {
  check_guard(g);
  if (beta1.intersects(beta2)) throw precondition_error("edge-blocks must be disjoint");
  long long best = std::numeric_limits<long long>::max();
  std::vector<CutSeparation> out;
  for_each_bipartition(g, [&](const VertexSet& side) {
    bool separates = (beta1.is_subset_of(side) && !beta2.intersects(side)) ||
                     (beta2.is_subset_of(side) && !beta1.intersects(side));
    if (!separates) return;
    CutSeparation sep(g, side);
    if (!sep.is_bond(g)) return;
    if (sep.order() < best) {
      best = sep.order();
      out.clear();
    }
    if (sep.order() == best) out.push_back(std::move(sep));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace edgeblocks

#pragma once

#include <random>
#include <vector>

#include "edgeblocks/multigraph.hpp"

namespace edgeblocks::testing {

// Shared fixture graphs, used by name throughout the tests.

inline Multigraph k2() { return Multigraph(2, {{0, 1, 1}}); }

inline Multigraph k2_triple() { return Multigraph(2, {{0, 1, 3}}); }

inline Multigraph c4() { return Multigraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}); }

inline Multigraph k4() {
  return Multigraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}

// Two triangles {0,1,2} and {3,4,5} plus the bridge 0-3.
inline Multigraph bowtie() {
  return Multigraph(6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1},
                        {0, 3, 1}});
}

// Three K4 copies with hubs 0, 4, 8 and a triangle between the hubs.
// Copy i occupies vertices 4i..4i+3.
inline Multigraph ex1() {
  std::vector<Multigraph::EdgeSpec> edges;
  for (int copy = 0; copy < 3; ++copy) {
    int base = 4 * copy;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) edges.push_back({base + a, base + b, 1});
  }
  edges.push_back({0, 4, 1});
  edges.push_back({4, 8, 1});
  edges.push_back({0, 8, 1});
  return Multigraph(12, edges);
}

inline std::vector<Multigraph> fixture_corpus() {
  return {k2(), k2_triple(), c4(), k4(), bowtie(), ex1()};
}

// Random connected multigraph over mixed topologies and densities: sparse
// tree-plus-extras, cycles with chords (which drive the distinguisher
// machinery hardest), and dense blobs. Multiplicities are bumped until a
// total budget. Deterministic per rng state.
inline Multigraph random_connected_multigraph(std::mt19937& rng, int max_n,
                                              long long max_total_mult) {
  int n = std::uniform_int_distribution<int>(2, max_n)(rng);
  std::vector<Multigraph::EdgeSpec> edges;
  int flavor = std::uniform_int_distribution<int>(0, 2)(rng);
  if (flavor == 1 && n >= 4) {
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, 1});
    int chords = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < chords; ++i) {
      int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
      int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
      if (u != v) edges.push_back({u, v, 1});
    }
  } else {
    for (int v = 1; v < n; ++v)
      edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v, 1});
    int density = std::uniform_int_distribution<int>(0, 2)(rng);
    int extra = std::uniform_int_distribution<int>(0, density * n)(rng);
    for (int i = 0; i < extra; ++i) {
      int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
      int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
      if (u != v) edges.push_back({u, v, 1});
    }
  }

  long long total = 0;
  for (const auto& e : edges) total += e.mult;
  while (total < max_total_mult && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    edges[std::uniform_int_distribution<size_t>(0, edges.size() - 1)(rng)].mult += 1;
    ++total;
  }
  return Multigraph(n, edges);
}

}  // namespace edgeblocks::testing

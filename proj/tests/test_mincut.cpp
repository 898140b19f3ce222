#include "doctest.h"

#include <random>

#include "edgeblocks/errors.hpp"
#include "edgeblocks/mincut.hpp"
#include "edgeblocks/oracles.hpp"
#include "fixtures.hpp"

using namespace edgeblocks;
namespace fx = edgeblocks::testing;

namespace {

VertexSet set(const Multigraph& g, std::vector<int> members) {
  return VertexSet(g.vertex_count(), std::move(members));
}

}  // namespace

TEST_CASE("min_cut on the fixtures") {
  Multigraph b = fx::bowtie();
  MinCutResult bridge = min_cut(b, set(b, {1}), set(b, {4}));
  CHECK(bridge.value == 1);
  CHECK(bridge.separation == CutSeparation(b, set(b, {0, 1, 2})));
  CHECK(bridge.separation.is_bond(b));

  Multigraph e = fx::ex1();
  MinCutResult copies = min_cut(e, set(e, {0, 1, 2, 3}), set(e, {4, 5, 6, 7}));
  CHECK(copies.value == 2);
  CHECK(copies.separation.is_bond(e));

  Multigraph k = fx::k2();
  MinCutResult direct = min_cut(k, set(k, {0}), set(k, {1}));
  CHECK(direct.value == 1);
  CHECK(direct.separation == CutSeparation(k, set(k, {0})));

  CHECK_THROWS_AS(min_cut(b, set(b, {0, 1}), set(b, {1, 2})), precondition_error);
  CHECK_THROWS_AS(min_cut(b, set(b, {}), set(b, {1})), precondition_error);
}

TEST_CASE("lambda on the fixtures") {
  Multigraph c = fx::c4();
  CHECK(lambda(c, 0, 2) == 2);
  Multigraph e = fx::ex1();
  CHECK(lambda(e, 0, 4) == 2);
  CHECK(lambda(e, 1, 2) == 3);
  Multigraph k = fx::k4();
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(lambda(k, u, v) == 3);
  CHECK_THROWS_AS(lambda(c, 1, 1), precondition_error);
}

TEST_CASE("gomory_hu on the fixtures") {
  Multigraph b = fx::bowtie();
  GomoryHuTree tree = gomory_hu(b);
  REQUIRE(tree.edges().size() == 5);
  int bridge_edges = 0;
  for (size_t i = 0; i < tree.edges().size(); ++i) {
    const auto& e = tree.edges()[i];
    if (e.weight == 1) {
      ++bridge_edges;
      CHECK((e.u < 3) != (e.v < 3));  // joins the two triangles
      CutSeparation cut(b, tree.fundamental_side(static_cast<int>(i)));
      CHECK(cut == CutSeparation(b, VertexSet(6, {0, 1, 2})));
    } else {
      CHECK(e.weight == 2);
    }
  }
  CHECK(bridge_edges == 1);

  GomoryHuTree k2_tree = gomory_hu(fx::k2());
  REQUIRE(k2_tree.edges().size() == 1);
  CHECK(k2_tree.edges()[0].weight == 1);

  GomoryHuTree c4_tree = gomory_hu(fx::c4());
  Multigraph c = fx::c4();
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(c4_tree.lambda(u, v) == 2);

  Multigraph disconnected(2, {});
  CHECK_THROWS_AS(gomory_hu(disconnected), precondition_error);
}

TEST_CASE("gomory_hu path minima equal lambda everywhere") {
  std::mt19937 rng(4201);
  for (int round = 0; round < 25; ++round) {
    Multigraph g = fx::random_connected_multigraph(rng, 9, 25);
    GomoryHuTree tree = gomory_hu(g);
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v)
        CHECK(tree.lambda(u, v) == lambda(g, u, v));
  }
}

TEST_CASE("gomory_hu fundamental cuts: right order, bonds, pairwise nested") {
  std::mt19937 rng(4202);
  std::vector<Multigraph> corpus = fx::fixture_corpus();
  for (int round = 0; round < 15; ++round)
    corpus.push_back(fx::random_connected_multigraph(rng, 9, 25));
  for (const Multigraph& g : corpus) {
    GomoryHuTree tree = gomory_hu(g);
    std::vector<CutSeparation> cuts;
    for (size_t e = 0; e < tree.edges().size(); ++e) {
      CutSeparation sep(g, tree.fundamental_side(static_cast<int>(e)));
      CHECK(sep.order() == tree.edges()[e].weight);
      CHECK(sep.is_bond(g));
      cuts.push_back(std::move(sep));
    }
    for (size_t a = 0; a < cuts.size(); ++a)
      for (size_t b = a + 1; b < cuts.size(); ++b) CHECK(nested(cuts[a], cuts[b]));
  }
}

TEST_CASE("enumerate_min_separations on the fixtures") {
  Multigraph c = fx::c4();
  std::vector<CutSeparation> seps = enumerate_min_separations(c, set(c, {0}), set(c, {2}));
  REQUIRE(seps.size() == 4);
  CHECK(seps[0] == CutSeparation(c, set(c, {0})));
  CHECK(seps[1] == CutSeparation(c, set(c, {2})));
  CHECK(seps[2] == CutSeparation(c, set(c, {0, 1})));
  CHECK(seps[3] == CutSeparation(c, set(c, {0, 3})));

  Multigraph b = fx::bowtie();
  std::vector<CutSeparation> bridge =
      enumerate_min_separations(b, set(b, {0, 1, 2}), set(b, {3, 4, 5}));
  REQUIRE(bridge.size() == 1);
  CHECK(bridge[0] == CutSeparation(b, set(b, {0, 1, 2})));

  Multigraph k = fx::k2();
  std::vector<CutSeparation> single = enumerate_min_separations(k, set(k, {0}), set(k, {1}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == CutSeparation(k, set(k, {0})));
}

TEST_CASE("enumeration cap raises its own error") {
  // complete graph on 8 vertices between adjacent vertices has many minimum
  // cuts; a tiny cap must trip
  std::vector<Multigraph::EdgeSpec> edges;
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) edges.push_back({u, v, 1});
  Multigraph k8(8, edges);
  CHECK_THROWS_AS(enumerate_min_separations(k8, set(k8, {0}), set(k8, {1}), 1),
                  enumeration_cap_error);
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
  std::mt19937 rng(4203);
  int seen = 0;
  while (seen < 60) {
    Multigraph g = fx::random_connected_multigraph(rng, 9, 25);
    const int n = g.vertex_count();
    int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u == v) continue;
    ++seen;
    VertexSet su = set(g, {u});
    VertexSet sv = set(g, {v});
    CHECK(enumerate_min_separations(g, su, sv) == brute_min_separations(g, su, sv, true));
  }
}

TEST_CASE("enumerated separations have the stated order and connected sides") {
  std::mt19937 rng(4204);
  for (int round = 0; round < 30; ++round) {
    Multigraph g = fx::random_connected_multigraph(rng, 9, 25);
    const int n = g.vertex_count();
    int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int v = (u + 1 + std::uniform_int_distribution<int>(0, n - 2)(rng)) % n;
    if (u == v) continue;
    VertexSet su = set(g, {u});
    VertexSet sv = set(g, {v});
    long long value = min_cut(g, su, sv).value;
    for (const CutSeparation& s : enumerate_min_separations(g, su, sv)) {
      CHECK(s.order() == value);
      CHECK(s.is_bond(g));
      CHECK(s.separates(su, sv));
    }
  }
}

TEST_CASE("multiplicities are capacities, not unit edges") {
  // one augmentation must carry the whole parallel class
  Multigraph heavy(3, {{0, 1, 1000000000}, {1, 2, 2000000000}});
  CHECK(lambda(heavy, 0, 1) == 1000000000);
  CHECK(lambda(heavy, 0, 2) == 1000000000);
  GomoryHuTree tree = gomory_hu(heavy);
  CHECK(tree.lambda(1, 2) == 2000000000);
}

TEST_CASE("min_cut value agrees with brute force") {
  std::mt19937 rng(4205);
  for (int round = 0; round < 40; ++round) {
    Multigraph g = fx::random_connected_multigraph(rng, 9, 25);
    const int n = g.vertex_count();
    int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int v = (u + 1) % n;
    CHECK(lambda(g, u, v) == brute_lambda(g, u, v));
  }
}

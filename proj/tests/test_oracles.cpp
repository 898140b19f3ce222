#include "doctest.h"

#include <random>

#include "edgeblocks/errors.hpp"
#include "edgeblocks/oracles.hpp"
#include "fixtures.hpp"

using namespace edgeblocks;
namespace fx = edgeblocks::testing;

TEST_CASE("brute_lambda") {
  CHECK(brute_lambda(fx::k2(), 0, 1) == 1);
  Multigraph c = fx::c4();
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(brute_lambda(c, u, v) == 2);
  CHECK(brute_lambda(fx::ex1(), 0, 5) == 2);  // hub of copy 1 vs a non-hub of copy 2

  std::vector<Multigraph::EdgeSpec> big;
  for (int v = 1; v < 17; ++v) big.push_back({0, v, 1});
  CHECK_THROWS_AS(brute_lambda(Multigraph(17, big), 0, 1), precondition_error);
  CHECK_THROWS_AS(brute_lambda(fx::c4(), 2, 2), precondition_error);
}

TEST_CASE("brute_blocks") {
  Multigraph e = fx::ex1();
  std::vector<VertexSet> level3 = brute_blocks(e, 3);
  REQUIRE(level3.size() == 3);
  CHECK(level3[0] == VertexSet(12, {0, 1, 2, 3}));
  CHECK(level3[1] == VertexSet(12, {4, 5, 6, 7}));
  CHECK(level3[2] == VertexSet(12, {8, 9, 10, 11}));

  CHECK(brute_blocks(fx::c4(), 3).size() == 4);
  CHECK(brute_blocks(fx::c4(), 1).size() == 1);
  CHECK(brute_blocks(fx::bowtie(), 2).size() == 2);
}

TEST_CASE("brute_blocks classes refine as k grows") {
  std::mt19937 rng(5301);
  for (int round = 0; round < 10; ++round) {
    Multigraph g = fx::random_connected_multigraph(rng, 8, 20);
    long long max_k = 1;
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v)
        max_k = std::max(max_k, brute_lambda(g, u, v));
    for (long long k = 1; k <= max_k; ++k) {
      std::vector<VertexSet> coarse = brute_blocks(g, k);
      std::vector<VertexSet> fine = brute_blocks(g, k + 1);
      for (const VertexSet& part : fine) {
        int supersets = 0;
        for (const VertexSet& cls : coarse)
          if (part.is_subset_of(cls)) ++supersets;
        CHECK(supersets == 1);
      }
    }
  }
}

TEST_CASE("brute_efficient_distinguishers") {
  Multigraph c = fx::c4();
  std::vector<CutSeparation> diag =
      brute_efficient_distinguishers(c, VertexSet(4, {0}), VertexSet(4, {2}));
  CHECK(diag.size() == 4);

  Multigraph b = fx::bowtie();
  std::vector<CutSeparation> bridge =
      brute_efficient_distinguishers(b, VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5}));
  REQUIRE(bridge.size() == 1);
  CHECK(bridge[0] == CutSeparation(b, VertexSet(6, {0, 1, 2})));
  CHECK(bridge[0].order() == 1);

  Multigraph k = fx::k2();
  std::vector<CutSeparation> only =
      brute_efficient_distinguishers(k, VertexSet(2, {0}), VertexSet(2, {1}));
  REQUIRE(only.size() == 1);
  CHECK(only[0].order() == 1);
}

TEST_CASE("EX1 pair family is exactly the two copy bonds") {
  Multigraph e = fx::ex1();
  std::vector<CutSeparation> fam =
      brute_efficient_distinguishers(e, VertexSet(12, {0, 1, 2, 3}), VertexSet(12, {4, 5, 6, 7}));
  REQUIRE(fam.size() == 2);
  CHECK(fam[0] == CutSeparation(e, VertexSet(12, {0, 1, 2, 3})));
  CHECK(fam[1] == CutSeparation(e, VertexSet(12, {4, 5, 6, 7})));
  for (const CutSeparation& s : fam) CHECK(s.order() == 2);
}

#include "doctest.h"

#include "test_support.hpp"
#include "uct/constructors.hpp"
#include "uct/error.hpp"
#include "uct/isomorphism.hpp"

using namespace uct;
using namespace uct::testing;

TEST_CASE("random relabelings are recognised") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Graph g = random_graph(10 + seed * 3, 0.3, seed);
    const Graph h = relabel(g, random_permutation(g.vertex_count(), seed + 100));
    const auto mapping = iso_check(g, h);
    REQUIRE(mapping);
    CHECK(verify_isomorphism(g, h, *mapping));
  }
}

TEST_CASE("small named pairs") {
  CHECK(iso_check(complete_bipartite(2, 2), cycle_graph(4)));
  CHECK_FALSE(iso_check(complete_graph(3), path_graph(3)));
  // Same degree sequence, different structure.
  const Graph two_triangles = from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(iso_check(cycle_graph(6), two_triangles));
  CHECK_FALSE(iso_check(complete_graph(3), complete_graph(4)));
}

TEST_CASE("regular graphs where refinement alone does not decide") {
  // Both cubic on 8 vertices: the cube versus the circulant C8(1,4).
  const Graph cube = hamming_graph(3, 2);
  GraphBuilder b(8);
  for (Vertex v = 0; v < 8; ++v) {
    b.add_edge(v, (v + 1) % 8);
    if (v < 4) b.add_edge(v, v + 4);
  }
  const Graph mobius = std::move(b).build();
  CHECK_FALSE(iso_check(cube, mobius));

  const Graph shuffled = relabel(cube, random_permutation(8, 9));
  CHECK(iso_check(cube, shuffled));
}

TEST_CASE("Cayley graph and semistrong product are isomorphic") {
  const Graph c = unitary_cayley(RingSpec::triangular(2, 3, 1));
  const Graph p = semistrong_product(complete_graph(3), antipodal_hamming_direct(2, 3));
  const auto mapping = iso_check(c, p);
  REQUIRE(mapping);
  CHECK(verify_isomorphism(c, p, *mapping));
}

TEST_CASE("oracle size limit") {
  CHECK_THROWS_AS(iso_check(edgeless_graph(513), edgeless_graph(513)), Error);
  CHECK(iso_check(edgeless_graph(512), edgeless_graph(512)));
}

TEST_CASE("verify_isomorphism rejects bad maps") {
  const Graph p = path_graph(3);
  CHECK(verify_isomorphism(p, p, std::vector<Vertex>{2, 1, 0}));
  CHECK_FALSE(verify_isomorphism(p, p, std::vector<Vertex>{1, 0, 2}));
  CHECK_FALSE(verify_isomorphism(p, p, std::vector<Vertex>{0, 0, 2}));
  CHECK_FALSE(verify_isomorphism(p, p, std::vector<Vertex>{0, 1}));
}

#include <algorithm>

#include "doctest.h"
#include "dks/embedding.hpp"
#include "dks/generators.hpp"
#include "helpers.hpp"

using namespace dks;

TEST_CASE("rng is deterministic") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(7);
  for (int i = 0; i < 1000; ++i) CHECK(c.below(13) < 13);
}

TEST_CASE("outerplanar generator") {
  Generated tri = gen_outerplanar({.n = 3, .rho = 1.0, .seed = 5});
  CHECK(tri.graph.edge_count() == 3);

  Generated c = gen_outerplanar({.n = 9, .rho = 0.0, .seed = 5});
  CHECK(c.graph.edge_count() == 9);
  for (Vertex v = 0; v < 9; ++v) CHECK(c.graph.degree(v) == 2);

  Generated full = gen_outerplanar({.n = 9, .rho = 1.0, .seed = 5});
  CHECK(full.graph.edge_count() == 2 * 9 - 3);

  for (std::uint64_t s = 1; s <= 30; ++s) {
    GenSpec sp{.n = 5 + static_cast<int>(s % 10), .rho = 0.5, .seed = s,
               .blocks = 1 + static_cast<int>(s % 3)};
    Generated a = gen_outerplanar(sp), b = gen_outerplanar(sp);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(a.rotation == b.rotation);
    CHECK(is_outerplanar(a.graph));
    CHECK(a.graph.vertex_count() == sp.n);
  }
}

TEST_CASE("b-outerplanar generator") {
  Generated one = gen_bouterplanar({.n = 8, .b = 1, .rho = 0.5, .seed = 3});
  CHECK(is_outerplanar(one.graph));
  int done = 0;
  for (std::uint64_t s = 1; done < 10; ++s) {
    int b = 2 + static_cast<int>(s % 2);
    Generated g;
    try {
      g = gen_bouterplanar({.n = 14, .b = b, .rho = 0.5, .seed = s});
    } catch (const Error& e) {
      CHECK(e.code() == Error::Code::InfeasibleSpec);
      continue;
    }
    ++done;
    LeveledEmbedding le = build_leveled(g.graph, g.rotation, g.outer_face);
    CHECK(le.b == b);
    CHECK(*std::max_element(le.level.begin(), le.level.end()) == b);
    CHECK(compute_levels(le.plane, le.outer_half_edge) == peel_levels(le.plane, le.outer_half_edge));
  }
}

TEST_CASE("planar generator") {
  Generated small = gen_planar({.n = 4, .rho = 1.0, .seed = 1});
  CHECK(small.graph.edge_count() <= 6);
  Generated big = gen_planar({.n = 50, .rho = 0.8, .seed = 11});
  CHECK(big.graph.edge_count() <= 3 * 50 - 6);
  CHECK_NOTHROW(planar_rotation(big.graph));
  Generated forest = gen_planar({.n = 30, .rho = 0.0, .seed = 2});
  int comps = 0;
  component_ids(forest.graph, &comps);
  CHECK(forest.graph.edge_count() == 30 - comps);
}

#include "doctest.h"
#include "dks/dp_bouterplanar.hpp"
#include "dks/generators.hpp"
#include "dks/oracle.hpp"
#include "dks/solve.hpp"
#include "../support.hpp"
#include "helpers.hpp"

using namespace dks;

namespace {

Slice make_slice(const Graph& g, std::vector<Vertex> verts, std::vector<Vertex> L,
                 std::vector<Vertex> R) {
  Slice s;
  std::sort(verts.begin(), verts.end());
  s.vertices = verts;
  for (auto [u, v] : g.edges())
    if (std::binary_search(verts.begin(), verts.end(), u) &&
        std::binary_search(verts.begin(), verts.end(), v))
      s.edges.push_back(std::minmax(u, v));
  std::sort(s.edges.begin(), s.edges.end());
  s.L = std::move(L);
  s.R = std::move(R);
  return s;
}

}  // namespace

TEST_CASE("template equals the single edge slice") {
  Graph g = unit::path(2);
  BoundaryTable t = template_table(0, 1, true, 3);
  BoundaryTable ref = brute_force_slice_table(make_slice(g, {0, 1}, {0}, {1}), 3);
  CHECK(unit::same_table(t, ref));
  CHECK(t.at(3, 2) == 1);
  CHECK(t.at(0, 0) == 0);
}

TEST_CASE("adjust") {
  Graph g = unit::path(2);
  BoundaryTable un = template_table(0, 1, false, 2);
  CHECK(un.at(3, 2) == 0);
  BoundaryTable adj = adjust(un, g);
  CHECK(adj.at(3, 2) == 1);
  // already counted: identity
  CHECK(unit::same_table(adjust(adj, g), adj));
  // not an edge: identity
  Graph none(2);
  CHECK(unit::same_table(adjust(un, none), un));
}

TEST_CASE("extend with an isolated vertex shifts columns") {
  Graph g = unit::make_graph(3, {{0, 1}});
  BoundaryTable t = template_table(0, 1, true, 3);
  BoundaryTable e = extend(2, t, 3, g);
  REQUIRE(e.L.front() == 2);
  REQUIRE(e.R.front() == 2);
  // rows: bit 0 = L[0] (z), bit 1 = L[1] (x), bit 2 = R[0] (z), bit 3 = R[1] (y)
  for (unsigned sx = 0; sx < 2; ++sx)
    for (unsigned sy = 0; sy < 2; ++sy) {
      unsigned old = sx | sy << 1;
      unsigned with_z = 1u | sx << 1 | 1u << 2 | sy << 3;
      unsigned without = sx << 1 | sy << 3;
      for (int k = 0; k <= 3; ++k) {
        Cell a = t.at(old, k), b = e.at(with_z, k + 1), c = e.at(without, k);
        CHECK(is_absent(a) == is_absent(b));
        CHECK(is_absent(a) == is_absent(c));
        if (!is_absent(a)) {
          CHECK(a == b);
          CHECK(a == c);
        }
      }
    }
  CHECK(e.at(1u | 1u << 2, 1) == 0);
}

TEST_CASE("extend and contract against slice brute force") {
  // triangle 0 1 2 with an extra vertex 3 adjacent to 0 and 2
  Graph g = unit::make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 2}});
  BoundaryTable base = brute_force_slice_table(make_slice(g, {0, 1, 2}, {0}, {2}), 4);
  BoundaryTable e = extend(3, base, 4, g);
  BoundaryTable ref = brute_force_slice_table(make_slice(g, {0, 1, 2, 3}, {3, 0}, {3, 2}), 4);
  CHECK(unit::same_table(e, ref));
  BoundaryTable c = contract(e);
  BoundaryTable ref_c = brute_force_slice_table(make_slice(g, {0, 1, 2, 3}, {0}, {2}), 4);
  CHECK(unit::same_table(c, ref_c));
  CHECK_THROWS_AS(contract(base), Error);
}

TEST_CASE("merge shares the common boundary") {
  // path 0 - 1 - 2: merge slices {0,1} and {1,2} over shared vertex 1
  Graph g = unit::path(3);
  BoundaryTable a = template_table(0, 1, true, 3);
  BoundaryTable b = template_table(1, 2, true, 3);
  BoundaryTable m = merge_tables(a, b, 3);
  BoundaryTable ref = brute_force_slice_table(make_slice(g, {0, 1, 2}, {0}, {2}), 3);
  CHECK(unit::same_table(m, ref));
}

TEST_CASE("closing a cycle counts the shared vertex once") {
  SolveOptions o;
  o.k = 4;
  o.solver = SolverKind::Bouterplanar;
  GraphInput in;
  in.graph = unit::cycle(4);
  CHECK(solve(in, o).best[4] == 4);
}

TEST_CASE("wheel") {
  GraphInput in;
  in.graph = unit::wheel(5);
  in.outer_face = std::vector<Vertex>{1, 2, 3, 4, 5};
  SolveOptions o;
  o.k = 6;
  SolveReport r = solve_bouterplanar(in, o);
  CHECK(r.b == 2);
  CHECK(r.best[6] == 10);
  auto brute = testsupport::naive_best(in.graph);
  for (int k = 0; k <= 6; ++k) CHECK(r.best[k] == brute[k]);
}

TEST_CASE("generated b-outerplanar against brute force") {
  int done = 0;
  for (std::uint64_t s = 1; done < 12; ++s) {
    Generated gb;
    try {
      gb = gen_bouterplanar({.n = 8 + static_cast<int>(s % 6), .b = 2 + static_cast<int>(s % 2),
                             .rho = 0.5, .seed = 500 + s});
    } catch (const Error&) {
      continue;
    }
    ++done;
    GraphInput in;
    in.graph = gb.graph;
    in.rotation = gb.rotation;
    in.outer_face = gb.outer_face;
    SolveOptions o;
    o.k = gb.graph.vertex_count();
    SolveReport r = solve_bouterplanar(in, o);
    auto brute = testsupport::naive_best(gb.graph);
    for (int k = 0; k <= o.k; ++k) CHECK(r.best[k] == brute[k]);
    o.k = o.k / 2;
    o.witness = true;
    SolveReport w = solve_bouterplanar(in, o);
    CHECK(testsupport::induced_edges(gb.graph, w.witness) == brute[o.k]);
  }
}

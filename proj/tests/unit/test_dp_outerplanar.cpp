#include "doctest.h"
#include "dks/dp_outerplanar.hpp"
#include "dks/generators.hpp"
#include "dks/solve.hpp"
#include "../support.hpp"
#include "helpers.hpp"

using namespace dks;

namespace {

std::vector<Cell> row(const EdgeTable& t, int bx, int by) {
  std::vector<Cell> out;
  for (int k = 0; k <= t.kmax; ++k) {
    Cell c = t.at(bx, by, k);
    out.push_back(is_absent(c) ? kAbsent : c);
  }
  return out;
}

const EdgeTable* find_table(const OuterplanarDump& d, const Graph& g, const std::string& lbl) {
  const EdgeTable* last = nullptr;
  for (const DumpedTable& t : d.tables)
    if (g.name(t.table.x) + g.name(t.table.y) == lbl) last = &t.table;
  return last;
}

constexpr Cell A = kAbsent;

}  // namespace

TEST_CASE("leaf table") {
  EdgeTable t = leaf_table(1, 0, true, 7);
  CHECK(row(t, 1, 1) == std::vector<Cell>{A, A, 1});
  CHECK(row(t, 0, 0) == std::vector<Cell>{0, A, A});
  CHECK(row(t, 1, 0) == std::vector<Cell>{A, 0, A});
  EdgeTable dup = leaf_table(1, 0, false, 7);
  CHECK(row(dup, 1, 1) == std::vector<Cell>{A, A, 0});
}

TEST_CASE("seven-vertex example merges") {
  Graph g = unit::example7();
  OuterplanarDump d = dump_outerplanar(g, 7, std::pair{g.find("c"), g.find("b")});
  const EdgeTable* h = find_table(d, g, "be");
  REQUIRE(h);
  CHECK(row(*h, 1, 1) == std::vector<Cell>{A, A, 1, 3});
  const EdgeTable* hn = find_table(d, g, "bf");
  REQUIRE(hn);
  CHECK(row(*hn, 1, 1) == std::vector<Cell>{A, A, 0, 2, 4});
  const EdgeTable* j = find_table(d, g, "cc");
  REQUIRE(j);
  // the k = 4 cell is 5: {b, c, e, g} spans five edges
  CHECK(row(*j, 1, 1) == std::vector<Cell>{A, 0, 1, 3, 5, 6, 8, 10});
  CHECK(extract_solution(*j, 7) == 10);
  CHECK(extract_solution(*j, 6) == 8);
  CHECK(extract_solution(*j, 0) == 0);
}

TEST_CASE("solve outerplanar on seven-vertex example") {
  Graph g = unit::example7();
  SolveOptions o;
  o.k = 7;
  o.witness = true;
  SolveReport r = solve_outerplanar(g, o);
  CHECK(r.best[7] == 10);
  CHECK(r.best[3] == 3);
  CHECK(testsupport::induced_edges(g, r.witness) == 10);
  auto brute = testsupport::naive_best(g);
  for (int k = 0; k <= 7; ++k) CHECK(r.best[k] == brute[k]);
}

TEST_CASE("k larger than n") {
  SolveOptions o;
  o.k = 4;
  try {
    solve_outerplanar(unit::cycle(3), o);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::KTooLarge);
  }
}

TEST_CASE("random outerplanar against brute force") {
  for (std::uint64_t s = 1; s <= 40; ++s) {
    GenSpec sp{.n = 4 + static_cast<int>(s % 9), .rho = (s % 5) / 4.0, .seed = s,
               .blocks = 1 + static_cast<int>(s % 3)};
    Generated gen = gen_outerplanar(sp);
    int n = gen.graph.vertex_count();
    SolveOptions o;
    o.k = n;
    SolveReport r = solve_outerplanar(gen.graph, o);
    auto brute = testsupport::naive_best(gen.graph);
    for (int k = 0; k <= n; ++k) {
      CHECK(r.best[k] == brute[k]);
      if (k >= 3) CHECK(r.best[k] <= 2 * k - 3);
    }
    o.k = n / 2 + 1;
    o.witness = true;
    SolveReport w = solve_outerplanar(gen.graph, o);
    CHECK(static_cast<int>(w.witness.size()) == o.k);
    CHECK(testsupport::induced_edges(gen.graph, w.witness) == brute[o.k]);
  }
}

TEST_CASE("merge variants run on every root") {
  Graph g = unit::example7();
  for (MergeVariant v : {MergeVariant::ShiftOnXY, MergeVariant::ShiftOnXZ}) {
    OuterplanarDump d = dump_outerplanar(g, 7, std::pair{g.find("c"), g.find("b")}, v);
    CHECK(d.best.size() == 8);
    CHECK(d.best[0] == 0);
  }
}

TEST_CASE("table text layout") {
  EdgeTable t = leaf_table(0, 1, true, 2);
  std::string s = table_tsv(t, unit::path(2));
  CHECK(s.find("1\t1\t\xE2\x88\x85\t\xE2\x88\x85\t1") != std::string::npos);
  CHECK(s.find("\xE2\x88\x85") != std::string::npos);
}

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dks/baker_tree.hpp"
#include "dks/kernels.hpp"

namespace dks {

// Table over (subset of the boundary vertices, k'). Row bit j is L[j] for
// j < |L| and R[j - |L|] otherwise; both lists run innermost first. Rows that
// give one vertex two different bits are absent.
struct BoundaryTable {
  std::vector<Vertex> L, R;
  int kmax = 0;      // columns 0..kmax
  int vertices = 0;  // vertices of the slice
  std::vector<std::vector<Cell>> cells;
  // REAL edges between boundary vertices already counted in the values.
  std::vector<std::pair<Vertex, Vertex>> counted;

  int width() const { return static_cast<int>(L.size() + R.size()); }
  Cell at(unsigned row, int k) const {
    return k >= 0 && k <= kmax ? cells[row][k] : kAbsent;
  }
};

BoundaryTable template_table(Vertex x, Vertex y, bool counted, int k);
// Adds REAL edge (a, b) to every row including both, unless already counted.
BoundaryTable count_edge(const BoundaryTable& t, Vertex a, Vertex b, const Graph& g);
BoundaryTable adjust(const BoundaryTable& t, const Graph& g);
BoundaryTable merge_tables(const BoundaryTable& a, const BoundaryTable& b, int k);
BoundaryTable contract(const BoundaryTable& t);
BoundaryTable extend(Vertex z, const BoundaryTable& t, int k, const Graph& g);
// Brute-force table of the subslice of leaf v anchored at child p of the
// enclosing face's tree vertex.
BoundaryTable create(const BakerForest& F, int v, int p, int k, const Graph& g);

struct TraceEntry {
  int node;
  int branch;  // 1..4
  int pivot;   // 0 unless branch 4
};

struct TableRun {
  BoundaryTable root;
  std::vector<int> calls;  // table invocations per tree node
  std::vector<TraceEntry> trace;
  long long cells = 0;     // table cells allocated
};

// Receives the table of every tree node once computed.
using BoundarySink = std::function<void(int node, const BoundaryTable&)>;

TableRun run_table(const BakerForest& F, int k, const Graph& g, const BoundarySink& sink = {});

// Column vector k' = 0..min(k, n) from the level-1 root table.
std::vector<Cell> extract_root(const BoundaryTable& root, int k);

std::string table_tsv(const BoundaryTable& t, const Graph& g);

}  // namespace dks

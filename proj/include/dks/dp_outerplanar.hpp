#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dks/baker_tree.hpp"
#include "dks/kernels.hpp"

namespace dks {

enum class MergeVariant {
  Exact,            // shared vertices and shared edges counted once
  ShiftOnXY,  // coincidence shift when x == z and b_x and b_y
  ShiftOnXZ,       // coincidence shift when x == z and b_x and b_z
};

// Table over (b_x, b_y, k') for a subtree labelled (x, y).
struct EdgeTable {
  Vertex x = -1, y = -1;
  int kmax = 0;              // columns 0..kmax
  int vertices = 0;          // vertices of the subtree's subgraph
  bool label_edge = false;   // edge (x, y) is counted inside the table
  std::array<std::vector<Cell>, 4> rows;  // index 2 * b_x + b_y

  Cell at(int bx, int by, int k) const {
    const auto& r = rows[2 * bx + by];
    return k >= 0 && k < static_cast<int>(r.size()) ? r[k] : kAbsent;
  }
};

EdgeTable leaf_table(Vertex x, Vertex y, bool counted, int k);
EdgeTable single_table(Vertex w, int k);

EdgeTable merge(const EdgeTable& a, const EdgeTable& b, int k, const Graph& g,
                MergeVariant variant = MergeVariant::Exact);

// Receives every table as it is produced: leaves and each merge result.
struct TableEvent {
  int node;        // tree node the table belongs to
  bool is_leaf;
  bool final;      // last table of the node's fold
  const EdgeTable* left = nullptr;
  const EdgeTable* right = nullptr;
  const EdgeTable& table;
};
using TableSink = std::function<void(const TableEvent&)>;

struct FoldOptions {
  MergeVariant variant = MergeVariant::Exact;
  bool reverse = false;  // fold children right to left with mirrored roles
  TableSink sink;
};

// Table of the subtree at v.
EdgeTable fold_vertex(const BakerForest& F, int v, int k, const Graph& g,
                      const FoldOptions& opt = {});

// Column vector over k' = 0..min(k, vertices) from a root table.
std::vector<Cell> extract_all(const EdgeTable& root, int k);
Cell extract_solution(const EdgeTable& root, int k);

// Vertex set attaining root value at column k (tree over g, outerplanar).
std::vector<Vertex> outerplanar_witness(const BakerForest& F, int k, const Graph& g);

struct DumpedTable {
  int node;
  int step;    // 0 for a leaf, j for the merge with child j
  bool final;  // last table of the node
  EdgeTable table;
};

struct OuterplanarDump {
  BakerForest forest;
  std::vector<DumpedTable> tables;  // production order
  std::vector<Cell> best;
};

// Every table of a connected outerplanar graph. With root_edge (u, v), an
// exterior edge, the root face lies on the inner side of u -> v and the
// leaf (u, v) is its first child; the embedding is mirrored when needed.
OuterplanarDump dump_outerplanar(const Graph& g, int k,
                                 const std::optional<std::pair<Vertex, Vertex>>& root_edge,
                                 MergeVariant variant = MergeVariant::Exact);

// TSV block in the layout rows 00/01/10/11, columns k=0..kmax, ∅ for absent.
std::string table_tsv(const EdgeTable& t, const Graph& g);

}  // namespace dks

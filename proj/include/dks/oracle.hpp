#pragma once

#include <utility>
#include <vector>

#include "dks/dp_bouterplanar.hpp"
#include "dks/graph.hpp"

namespace dks {

inline constexpr int kOracleCap = 20;

struct OracleResult {
  std::vector<int> best;                    // best[k] for k = 0..n
  std::vector<std::vector<Vertex>> witness;  // first maximizer per k
};

// Maximum REAL edges over all k-subsets; witness is the first maximizer in
// lexicographic combination order.
int brute_force_densest_k(const Graph& g, int k, std::vector<Vertex>* witness = nullptr,
                          int cap = kOracleCap);
OracleResult brute_force_all(const Graph& g, int cap = kOracleCap);

// Subgraph with designated left and right boundaries.
struct Slice {
  std::vector<Vertex> vertices;                   // sorted
  std::vector<std::pair<Vertex, Vertex>> edges;   // REAL, (min, max), sorted
  std::vector<Vertex> L, R;
};

BoundaryTable brute_force_slice_table(const Slice& s, int k, int cap = kOracleCap);

}  // namespace dks

#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dks/dp_bouterplanar.hpp"
#include "dks/graph.hpp"
#include "dks/io.hpp"

namespace unit {

inline dks::Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  dks::Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline dks::Graph cycle(int n) {
  dks::Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline dks::Graph path(int n) {
  dks::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline dks::Graph complete(int n) {
  dks::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Hub 0 joined to the cycle 1..r.
inline dks::Graph wheel(int r) {
  dks::Graph g(r + 1);
  for (int i = 1; i <= r; ++i) g.add_edge(i, i % r + 1);
  for (int i = 1; i <= r; ++i) g.add_edge(0, i);
  return g;
}

inline dks::Graph example7() {
  return dks::read_graph_file(std::string(DKS_TEST_DATA) + "/example7.txt").graph;
}

inline bool same_table(const dks::BoundaryTable& a, const dks::BoundaryTable& b) {
  if (a.L != b.L || a.R != b.R || a.cells.size() != b.cells.size()) return false;
  int kmax = std::max(a.kmax, b.kmax);
  for (unsigned row = 0; row < a.cells.size(); ++row)
    for (int k = 0; k <= kmax; ++k) {
      dks::Cell x = a.at(row, k), y = b.at(row, k);
      if (dks::is_absent(x) != dks::is_absent(y)) return false;
      if (!dks::is_absent(x) && x != y) return false;
    }
  return true;
}

}  // namespace unit

#pragma once

#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dks/graph.hpp"
#include "dks/kernels.hpp"

namespace testsupport {

// Best edge count for every k by enumerating all vertex subsets.
inline std::vector<int> naive_best(const dks::Graph& g) {
  int n = g.vertex_count();
  std::vector<std::uint32_t> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= 1u << v;
    nb[v] |= 1u << u;
  }
  std::vector<int> best(n + 1, 0);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int e = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1u) e += std::popcount(nb[v] & s);
    int k = std::popcount(s);
    best[k] = std::max(best[k], e / 2);
  }
  return best;
}

inline int induced_edges(const dks::Graph& g, const std::vector<dks::Vertex>& set) {
  int e = 0;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) e += g.has_edge(set[i], set[j]);
  return e;
}

// Worked reference tables: name -> (x, y, rows[4] of cells, kAbsent for '-').
struct RefTable {
  std::string x, y;
  std::vector<std::vector<dks::Cell>> rows;
};

inline std::map<std::string, RefTable> load_ref_tables(const std::string& path) {
  std::ifstream in(path);
  std::map<std::string, RefTable> out;
  std::string line, current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (line.rfind("table", 0) == 0) {
      std::string kw;
      RefTable t;
      ls >> kw >> current >> t.x >> t.y;
      out[current] = t;
      continue;
    }
    int bx, by;
    ls >> bx >> by;
    std::vector<dks::Cell> row;
    std::string tok;
    while (ls >> tok) row.push_back(tok == "-" ? dks::kAbsent : std::stoi(tok));
    out[current].rows.push_back(row);
  }
  return out;
}

}  // namespace testsupport

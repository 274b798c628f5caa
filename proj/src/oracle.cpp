#include "dks/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace dks {

namespace {

void check_cap(int n, int cap) {
  if (n > cap) throw Error(Error::Code::CapExceeded, "graph exceeds the oracle cap");
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

// True when the sorted tuple of a precedes that of b lexicographically.
bool lex_before(std::uint32_t a, std::uint32_t b) {
  std::uint32_t d = a ^ b;
  return d && (a & d & (~d + 1));
}

std::vector<Vertex> members(std::uint32_t m) {
  std::vector<Vertex> out;
  for (Vertex v = 0; m; ++v, m >>= 1)
    if (m & 1u) out.push_back(v);
  return out;
}

}  // namespace

int brute_force_densest_k(const Graph& g, int k, std::vector<Vertex>* witness, int cap) {
  int n = g.vertex_count();
  check_cap(n, cap);
  if (k < 0 || k > n) throw Error(Error::Code::KTooLarge, "k outside 0..n");
  auto adj = adjacency_masks(g);
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  int best = -1;
  std::vector<int> best_idx;
  while (true) {
    int e = 0;
    std::uint32_t m = 0;
    for (int i = 0; i < k; ++i) {
      e += __builtin_popcount(adj[idx[i]] & m);
      m |= 1u << idx[i];
    }
    if (e > best) {
      best = e;
      best_idx = idx;
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (witness) witness->assign(best_idx.begin(), best_idx.end());
  return best;
}

OracleResult brute_force_all(const Graph& g, int cap) {
  int n = g.vertex_count();
  check_cap(n, cap);
  auto adj = adjacency_masks(g);
  std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<int> edges(std::size_t{1} << n, 0);
  std::vector<int> best(n + 1, -1);
  std::vector<std::uint32_t> arg(n + 1, 0);
  for (std::uint32_t m = 1; m <= full && m != 0; ++m) {
    int low = __builtin_ctz(m);
    std::uint32_t rest = m & (m - 1);
    edges[m] = edges[rest] + __builtin_popcount(adj[low] & rest);
    int s = __builtin_popcount(m);
    if (edges[m] > best[s] || (edges[m] == best[s] && lex_before(m, arg[s]))) {
      best[s] = edges[m];
      arg[s] = m;
    }
    if (m == full) break;
  }
  best[0] = 0;
  OracleResult r;
  r.best = best;
  for (int s = 0; s <= n; ++s) r.witness.push_back(members(arg[s]));
  return r;
}

BoundaryTable brute_force_slice_table(const Slice& s, int k, int cap) {
  int n = static_cast<int>(s.vertices.size());
  check_cap(n, cap);
  auto local = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(s.vertices.begin(), s.vertices.end(), v) -
                            s.vertices.begin());
  };
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [a, b] : s.edges) {
    adj[local(a)] |= 1u << local(b);
    adj[local(b)] |= 1u << local(a);
  }
  std::vector<int> bpos;
  for (Vertex v : s.L) bpos.push_back(local(v));
  for (Vertex v : s.R) bpos.push_back(local(v));
  BoundaryTable t;
  t.L = s.L;
  t.R = s.R;
  t.vertices = n;
  t.kmax = std::min(k, n);
  t.cells.assign(std::size_t{1} << bpos.size(), std::vector<Cell>(t.kmax + 1, kAbsent));
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    int size = __builtin_popcount(m);
    if (size > t.kmax) continue;
    int e = 0;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1u) e += __builtin_popcount(adj[v] & m);
    e /= 2;
    unsigned row = 0;
    for (std::size_t j = 0; j < bpos.size(); ++j) row |= ((m >> bpos[j]) & 1u) << j;
    t.cells[row][size] = std::max(t.cells[row][size], e);
  }
  return t;
}

}  // namespace dks

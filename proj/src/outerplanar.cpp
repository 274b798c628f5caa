#include <algorithm>
#include <deque>
#include <unordered_set>

#include "dks/embedding.hpp"

namespace dks {

namespace {

[[noreturn]] void reject(const std::string& why) { throw Error(Error::Code::NotOuterplanar, why); }

// Hamiltonian cycle of a biconnected outerplanar block by ear elimination.
// index is scratch over all vertices, -1 outside the call.
std::vector<Vertex> block_cycle(const Graph& g, const std::vector<int>& edge_ids,
                                std::vector<int>& index) {
  std::vector<Vertex> verts;
  for (int e : edge_ids) {
    verts.push_back(g.edges()[e].first);
    verts.push_back(g.edges()[e].second);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  int n = static_cast<int>(verts.size());
  if (n == 2) return verts;
  for (int i = 0; i < n; ++i) index[verts[i]] = i;
  struct Reset {
    const std::vector<Vertex>& vs;
    std::vector<int>& idx;
    ~Reset() {
      for (Vertex v : vs) idx[v] = -1;
    }
  } reset{verts, index};
  auto local = [&](Vertex v) { return index[v]; };
  if (static_cast<int>(edge_ids.size()) > 2 * n - 3) reject("too many edges for outerplanarity");
  // adjacency lists with lazy deletion; present holds every live edge once
  std::vector<std::vector<int>> adj(n);
  std::vector<int> deg(n, 0);
  std::unordered_set<std::uint64_t> present;
  present.reserve(2 * (edge_ids.size() + n));
  auto key = [](int a, int b) { return pair_key(a, b); };
  for (int e : edge_ids) {
    int a = local(g.edges()[e].first), b = local(g.edges()[e].second);
    adj[a].push_back(b);
    adj[b].push_back(a);
    ++deg[a];
    ++deg[b];
    present.insert(key(a, b));
  }
  std::vector<char> removed(n, 0);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 2) queue.push_back(v);
  struct Ear {
    int v, a, b;
  };
  std::vector<Ear> ears;
  int alive = n;
  while (alive > 3) {
    int v = -1;
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      if (!removed[c] && deg[c] == 2) {
        v = c;
        break;
      }
    }
    if (v < 0) reject("no degree-2 vertex in a block");
    int a = -1, b = -1;
    for (int w : adj[v])
      if (!removed[w] && present.count(key(v, w))) (a < 0 ? a : b) = w;
    removed[v] = 1;
    --alive;
    present.erase(key(v, a));
    present.erase(key(v, b));
    --deg[a];
    --deg[b];
    adj[v].clear();
    if (present.insert(key(a, b)).second) {
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++deg[a];
      ++deg[b];
    }
    ears.push_back({v, a, b});
    for (int x : {a, b})
      if (deg[x] == 2) queue.push_back(x);
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) rest.push_back(v);
  std::vector<int> next(n, -1), prev(n, -1);
  for (int i = 0; i < 3; ++i) {
    next[rest[i]] = rest[(i + 1) % 3];
    prev[rest[(i + 1) % 3]] = rest[i];
  }
  for (auto it = ears.rbegin(); it != ears.rend(); ++it) {
    int a = it->a, b = it->b;
    if (next[b] == a) std::swap(a, b);
    if (next[a] != b) reject("ear endpoints not consecutive");
    next[a] = it->v;
    prev[it->v] = a;
    next[it->v] = b;
    prev[b] = it->v;
  }
  std::vector<Vertex> cycle;
  int s = rest[0];
  int v = s;
  do {
    cycle.push_back(verts[v]);
    v = next[v];
  } while (v != s && static_cast<int>(cycle.size()) <= n);
  if (static_cast<int>(cycle.size()) != n) reject("ear reconstruction failed");
  // every block edge must be a cycle edge or a non-crossing chord
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[local(cycle[i])] = i;
  std::vector<std::pair<int, int>> chords;
  for (int e : edge_ids) {
    int p = pos[local(g.edges()[e].first)], q = pos[local(g.edges()[e].second)];
    if (p > q) std::swap(p, q);
    if (q - p == 1 || (p == 0 && q == n - 1)) continue;
    chords.emplace_back(p, q);
  }
  int cycle_edges = static_cast<int>(edge_ids.size() - chords.size());
  if (cycle_edges != n) reject("block is not Hamiltonian");
  std::sort(chords.begin(), chords.end(), [](auto x, auto y) {
    return x.first != y.first ? x.first < y.first : x.second > y.second;
  });
  std::vector<int> open;
  for (auto [l, r] : chords) {
    while (!open.empty() && open.back() <= l) open.pop_back();
    if (!open.empty() && r > open.back()) reject("crossing chords");
    open.push_back(r);
  }
  return cycle;
}

}  // namespace

OuterplanarEmbedding recognize_outerplanar(const Graph& g) {
  int n = g.vertex_count();
  OuterplanarEmbedding emb;
  emb.rotation.assign(n, {});
  BlockDecomposition bd = bridges_and_cutpoints(g);
  std::vector<int> comp = component_ids(g);
  std::vector<char> comp_done(n, 0);
  std::vector<int> index(n, -1), where_at(n, -1);
  for (const auto& block : bd.blocks) {
    std::vector<Vertex> cycle = block_cycle(g, block, index);
    int len = static_cast<int>(cycle.size());
    for (int i = 0; i < len; ++i) where_at[cycle[i]] = i;
    auto where = [&](Vertex v) { return where_at[v]; };
    // per-vertex neighbours inside the block, ordered ccw on the convex polygon
    std::vector<std::vector<std::pair<int, Vertex>>> local(len);
    for (int e : block) {
      auto [u, v] = g.edges()[e];
      int pu = where(u), pv = where(v);
      local[pu].emplace_back((pv - pu + len) % len, v);
      local[pv].emplace_back((pu - pv + len) % len, u);
    }
    for (int i = 0; i < len; ++i) {
      std::sort(local[i].begin(), local[i].end());
      for (auto [off, w] : local[i]) emb.rotation[cycle[i]].push_back(w);
    }
    int c = comp[cycle[0]];
    if (!comp_done[c]) {
      comp_done[c] = 1;
      emb.outer_edges.emplace_back(cycle[1 % len], cycle[0]);
    }
  }
  return emb;
}

bool is_outerplanar(const Graph& g) {
  try {
    recognize_outerplanar(g);
    return true;
  } catch (const Error& e) {
    if (e.code() == Error::Code::NotOuterplanar) return false;
    throw;
  }
}

std::vector<Vertex> outer_walk(const PlaneGraph& pg, int outer_half_edge) {
  std::vector<Vertex> walk;
  int h = outer_half_edge;
  do {
    walk.push_back(pg.tail(h));
    h = pg.face_next(h);
  } while (h != outer_half_edge);
  return walk;
}

}  // namespace dks

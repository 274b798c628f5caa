#include "dks/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dks {

Graph::Graph(int n) : adj_(n), names_(n) {
  for (int i = 0; i < n; ++i) {
    names_[i] = std::to_string(i);
    index_.emplace(names_[i], i);
  }
}

Vertex Graph::add_vertex(const std::string& name) {
  Vertex v = vertex_count();
  adj_.emplace_back();
  names_.push_back(name.empty() ? std::to_string(v) : name);
  index_.emplace(names_.back(), v);
  return v;
}

int Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw Error(Error::Code::Parse, "edge endpoint out of range");
  if (u == v) throw Error(Error::Code::Parse, "self loop on vertex " + names_[u]);
  if (!keys_.insert(pair_key(u, v)).second)
    throw Error(Error::Code::Parse, "duplicate edge " + names_[u] + " " + names_[v]);
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  edges_.emplace_back(u, v);
  return edge_count() - 1;
}

Vertex Graph::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int VertexSet::size() const {
  int c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

int induced_edge_count(const Graph& g, const VertexSet& s) {
  int c = 0;
  for (auto [u, v] : g.edges())
    if (s.contains(u) && s.contains(v)) ++c;
  return c;
}

std::vector<int> component_ids(const Graph& g, int* count) {
  int n = g.vertex_count();
  std::vector<int> id(n, -1);
  int c = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (id[s] >= 0) continue;
    id[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (id[w] < 0) {
          id[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return id;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  int c = 0;
  auto id = component_ids(g, &c);
  std::vector<VertexSet> out(c, VertexSet(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[id[v]].insert(v);
  return out;
}

BlockDecomposition bridges_and_cutpoints(const Graph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  // incidence lists of edge ids
  std::vector<std::vector<int>> inc(n);
  for (int e = 0; e < m; ++e) {
    inc[g.edges()[e].first].push_back(e);
    inc[g.edges()[e].second].push_back(e);
  }
  BlockDecomposition out;
  out.edge_block.assign(m, -1);
  std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1);
  std::vector<char> is_cut(n, 0);
  std::vector<int> edge_stack;
  struct Frame {
    Vertex v;
    std::size_t next;
    int children;
  };
  std::vector<Frame> stack;
  int timer = 0;
  auto other = [&](int e, Vertex v) {
    auto [a, b] = g.edges()[e];
    return a == v ? b : a;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      Vertex v = f.v;
      if (f.next < inc[v].size()) {
        int e = inc[v][f.next++];
        if (e == parent_edge[v]) continue;
        Vertex w = other(e, v);
        if (disc[w] < 0) {
          parent_edge[w] = e;
          disc[w] = low[w] = timer++;
          edge_stack.push_back(e);
          ++f.children;
          stack.push_back({w, 0, 0});
        } else if (disc[w] < disc[v]) {
          low[v] = std::min(low[v], disc[w]);
          edge_stack.push_back(e);
        }
        continue;
      }
      stack.pop_back();
      if (stack.empty()) break;
      Vertex u = stack.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        if (u != root || stack.back().children > 1) is_cut[u] = 1;
        if (low[v] > disc[u]) out.bridges.push_back(parent_edge[v]);
        std::vector<int> block;
        int pe = parent_edge[v];
        while (true) {
          int e = edge_stack.back();
          edge_stack.pop_back();
          out.edge_block[e] = static_cast<int>(out.blocks.size());
          block.push_back(e);
          if (e == pe) break;
        }
        out.blocks.push_back(std::move(block));
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cutpoints.push_back(v);
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& verts, std::vector<Vertex>* map) {
  std::vector<Vertex> pos(g.vertex_count(), -1);
  Graph h;
  for (Vertex v : verts) pos[v] = h.add_vertex(g.name(v));
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) h.add_edge(pos[u], pos[v]);
  if (map) *map = verts;
  return h;
}

}  // namespace dks

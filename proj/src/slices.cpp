#include "dks/slices.hpp"

#include <algorithm>
#include <set>

namespace dks {

namespace {

struct Parts {
  std::set<Vertex> vertices;
  std::set<std::pair<Vertex, Vertex>> edges;

  void add_vertex(Vertex v) { vertices.insert(v); }
  void add_edge_if_real(const Graph& g, Vertex a, Vertex b) {
    if (a == b || !g.has_edge(a, b)) return;
    vertices.insert(a);
    vertices.insert(b);
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  void absorb(const Parts& o) {
    vertices.insert(o.vertices.begin(), o.vertices.end());
    edges.insert(o.edges.begin(), o.edges.end());
  }
};

Parts build(const BakerForest& F, int v, const Graph& g) {
  const TreeNode& nd = F.nodes[v];
  Parts p;
  p.add_vertex(nd.x);
  p.add_vertex(nd.y);
  if (nd.kind == NodeKind::Leaf && nd.level == 1) {
    p.add_edge_if_real(g, nd.x, nd.y);
    return p;
  }
  if (nd.kind == NodeKind::Leaf || nd.kind == NodeKind::Single) {
    int vf = F.components[nd.component].enclosing;
    const auto& U = F.nodes[vf].children;
    std::vector<Vertex> Z = F.child_sequence(vf);
    int t = static_cast<int>(U.size());
    if (nd.lbn != nd.rbn) {
      for (int j = nd.lbn; j < nd.rbn; ++j) p.absorb(build(F, U[j - 1], g));
      for (int j = nd.lbn; j <= nd.rbn; ++j) {
        p.add_edge_if_real(g, nd.x, Z[j - 1]);
        p.add_edge_if_real(g, nd.y, Z[j - 1]);
      }
    } else {
      int b = nd.lbn;
      const auto& B = b == t + 1 ? F.nodes[U[t - 1]].right : F.nodes[U[b - 1]].left;
      for (Vertex w : B) p.add_vertex(w);
      for (std::size_t j = 0; j + 1 < B.size(); ++j) p.add_edge_if_real(g, B[j], B[j + 1]);
      p.add_edge_if_real(g, nd.x, Z[b - 1]);
      p.add_edge_if_real(g, nd.y, Z[b - 1]);
    }
    p.add_edge_if_real(g, nd.x, nd.y);
    return p;
  }
  if (nd.encloses >= 0)
    p.absorb(build(F, F.components[nd.encloses].root, g));
  else
    for (int c : nd.children) p.absorb(build(F, c, g));
  p.add_edge_if_real(g, nd.x, nd.y);
  return p;
}

}  // namespace

Slice materialize_slice(const BakerForest& F, int v, const Graph& g) {
  Parts p = build(F, v, g);
  Slice s;
  s.vertices.assign(p.vertices.begin(), p.vertices.end());
  s.edges.assign(p.edges.begin(), p.edges.end());
  s.L = F.nodes[v].left;
  s.R = F.nodes[v].right;
  return s;
}

}  // namespace dks

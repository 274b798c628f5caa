#include "dks/dp_outerplanar.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace dks {

namespace {

EdgeTable blank(Vertex x, Vertex y, int vertices, int k) {
  EdgeTable t;
  t.x = x;
  t.y = y;
  t.vertices = vertices;
  t.kmax = std::min(k, vertices);
  for (auto& r : t.rows) r.assign(t.kmax + 1, kAbsent);
  return t;
}

int shared_vertices(Vertex x, Vertex y, Vertex z) { return 1 + (x == z && x != y ? 1 : 0); }

// Column shift and value correction for one (b_x, b_y, b_z) combination.
// Returns false when the combination is structurally impossible.
bool merge_terms(const EdgeTable& a, const EdgeTable& b, bool xz_edge, MergeVariant variant,
                 int bx, int by, int bz, int& shift, Cell& delta) {
  Vertex x = a.x, y = a.y, z = b.y;
  delta = 0;
  if (variant == MergeVariant::Exact) {
    if (x == z && bx != bz) return false;
    if (x == y && bx != by) return false;
    if (y == z && by != bz) return false;
    bool ring = x == z && x != y;
    shift = by + (ring ? bx : 0);
    if (ring && bx && by && a.label_edge && b.label_edge) delta -= 1;
    if (x != z && bx && bz && xz_edge && !(y == z && a.label_edge) &&
        !(x == y && b.label_edge))
      delta += 1;
    return true;
  }
  bool cond = variant == MergeVariant::ShiftOnXY ? (bx && by) : (bx && bz);
  shift = by + (x == z && cond ? 1 : 0);
  if (x != z && bx && bz && xz_edge) delta += 1;
  return true;
}

EdgeTable transpose(const EdgeTable& t) {
  EdgeTable r = t;
  std::swap(r.x, r.y);
  std::swap(r.rows[1], r.rows[2]);
  return r;
}

// Node table inputs: leaf or single tables, or the ordered child list.
EdgeTable base_table(const TreeNode& nd, int k, bool reverse) {
  if (nd.kind == NodeKind::Single) return single_table(nd.x, k);
  EdgeTable t = leaf_table(nd.x, nd.y, nd.counted, k);
  return reverse ? transpose(t) : t;
}

}  // namespace

EdgeTable leaf_table(Vertex x, Vertex y, bool counted, int k) {
  EdgeTable t = blank(x, y, 2, k);
  t.label_edge = counted;
  t.rows[0][0] = 0;
  if (t.kmax >= 1) t.rows[1][1] = t.rows[2][1] = 0;
  if (t.kmax >= 2) t.rows[3][2] = counted ? 1 : 0;
  return t;
}

EdgeTable single_table(Vertex w, int k) {
  EdgeTable t = blank(w, w, 1, k);
  t.rows[0][0] = 0;
  if (t.kmax >= 1) t.rows[3][1] = 0;
  return t;
}

EdgeTable merge(const EdgeTable& a, const EdgeTable& b, int k, const Graph& g,
                MergeVariant variant) {
  if (a.y != b.x) throw Error(Error::Code::BoundaryMismatch, "merge operands do not share y");
  Vertex x = a.x, y = a.y, z = b.y;
  EdgeTable t = blank(x, z, a.vertices + b.vertices - shared_vertices(x, y, z), k);
  bool xz_edge = x != z && g.has_edge(x, z);
  if (y == z && x != y)
    t.label_edge = a.label_edge;
  else if (x == y && y != z)
    t.label_edge = b.label_edge;
  else
    t.label_edge = xz_edge;
  for (int bx = 0; bx < 2; ++bx)
    for (int bz = 0; bz < 2; ++bz) {
      auto& out = t.rows[2 * bx + bz];
      for (int by = 0; by < 2; ++by) {
        int shift;
        Cell delta;
        if (!merge_terms(a, b, xz_edge, variant, bx, by, bz, shift, delta)) continue;
        const auto& ra = a.rows[2 * bx + by];
        const auto& rb = b.rows[2 * by + bz];
        kernels::maxplus(out.data(), static_cast<int>(out.size()), ra.data(),
                         static_cast<int>(ra.size()), rb.data(), static_cast<int>(rb.size()), shift,
                         delta);
      }
      kernels::normalize(out.data(), static_cast<int>(out.size()));
    }
  return t;
}

EdgeTable fold_vertex(const BakerForest& F, int v, int k, const Graph& g, const FoldOptions& opt) {
  // depth-first post-order leaves a node's child tables on top of the stack
  std::vector<EdgeTable> st;
  for (int u : F.postorder(v)) {
    const TreeNode& nd = F.nodes[u];
    if (nd.children.empty()) {
      st.push_back(base_table(nd, k, opt.reverse));
      if (opt.sink) opt.sink({u, true, true, nullptr, nullptr, st.back()});
      continue;
    }
    std::size_t m = nd.children.size(), base = st.size() - m;
    auto child = [&](std::size_t j) -> EdgeTable& {
      return st[base + (opt.reverse ? m - 1 - j : j)];
    };
    EdgeTable acc = std::move(child(0));
    for (std::size_t j = 1; j < m; ++j) {
      EdgeTable next = merge(acc, child(j), k, g, opt.variant);
      if (opt.sink) opt.sink({u, false, j + 1 == m, &acc, &child(j), next});
      acc = std::move(next);
    }
    st.resize(base);
    st.push_back(std::move(acc));
  }
  return std::move(st.back());
}

std::vector<Cell> extract_all(const EdgeTable& root, int k) {
  int top = std::min(k, root.kmax);
  std::vector<Cell> out(top + 1, kAbsent);
  for (int c = 0; c <= top; ++c)
    for (const auto& r : root.rows)
      if (c < static_cast<int>(r.size())) out[c] = std::max(out[c], r[c]);
  return out;
}

Cell extract_solution(const EdgeTable& root, int k) {
  if (k > root.vertices) throw Error(Error::Code::KTooLarge, "k exceeds the vertex count");
  return extract_all(root, k)[k];
}

std::vector<Vertex> outerplanar_witness(const BakerForest& F, int k, const Graph& g) {
  // partial fold tables per node, kept for the traceback
  std::vector<std::vector<EdgeTable>> partial(F.nodes.size());
  for (int u : F.postorder(F.root)) {
    const TreeNode& nd = F.nodes[u];
    if (nd.children.empty()) {
      partial[u].push_back(base_table(nd, k, false));
      continue;
    }
    partial[u].push_back(partial[nd.children[0]].back());
    for (std::size_t j = 1; j < nd.children.size(); ++j)
      partial[u].push_back(merge(partial[u].back(), partial[nd.children[j]].back(), k, g));
  }
  const EdgeTable& root = partial[F.root].back();
  if (k > root.vertices) throw Error(Error::Code::KTooLarge, "k exceeds the vertex count");
  int best_row = -1;
  for (int r = 0; r < 4; ++r)
    if (root.rows[r].size() > static_cast<std::size_t>(k) && !is_absent(root.rows[r][k]) &&
        (best_row < 0 || root.rows[r][k] > root.rows[best_row][k]))
      best_row = r;
  std::vector<char> in(g.vertex_count(), 0);
  struct Item {
    int node, bx, by, k;
  };
  std::vector<Item> st{{F.root, best_row >> 1, best_row & 1, k}};
  while (!st.empty()) {
    Item it = st.back();
    st.pop_back();
    const TreeNode& nd = F.nodes[it.node];
    if (nd.children.empty()) {
      if (it.bx) in[nd.x] = 1;
      if (it.by) in[nd.y] = 1;
      continue;
    }
    int bx = it.bx, bz = it.by, kk = it.k;
    for (int j = static_cast<int>(nd.children.size()) - 1; j >= 1; --j) {
      const EdgeTable& a = partial[it.node][j - 1];
      const EdgeTable& b = partial[nd.children[j]].back();
      bool xz_edge = a.x != b.y && g.has_edge(a.x, b.y);
      Cell target = partial[it.node][j].at(bx, bz, kk);
      bool found = false;
      for (int by = 0; by < 2 && !found; ++by) {
        int shift;
        Cell delta;
        if (!merge_terms(a, b, xz_edge, MergeVariant::Exact, bx, by, bz, shift, delta)) continue;
        for (int kx = 0; kx <= a.kmax && !found; ++kx) {
          int kz = kk - kx + shift;
          Cell va = a.at(bx, by, kx), vb = b.at(by, bz, kz);
          if (is_absent(va) || is_absent(vb) || va + vb + delta != target) continue;
          st.push_back({nd.children[j], by, bz, kz});
          bz = by;
          kk = kx;
          found = true;
        }
      }
      if (!found) throw Error(Error::Code::BoundaryMismatch, "traceback failed");
    }
    st.push_back({nd.children[0], bx, bz, kk});
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

OuterplanarDump dump_outerplanar(const Graph& g, int k,
                                 const std::optional<std::pair<Vertex, Vertex>>& root_edge,
                                 MergeVariant variant) {
  OuterplanarEmbedding emb = recognize_outerplanar(g);
  if (emb.outer_edges.size() != 1)
    throw Error(Error::Code::NotOuterplanar, "table dump needs a connected graph");
  PlaneGraph pg(g, emb.rotation);
  int oh = pg.find(emb.outer_edges[0].first, emb.outer_edges[0].second);
  int start = -1;
  if (root_edge) {
    FaceSet fs = trace_faces(pg);
    int h = pg.find(root_edge->first, root_edge->second);
    if (h < 0) throw Error(Error::Code::BoundaryMismatch, "root edge is not an edge");
    int outer = fs.face_of[oh];
    if (fs.face_of[h] != outer) {
      if (fs.face_of[PlaneGraph::twin(h)] != outer)
        throw Error(Error::Code::BoundaryMismatch, "root edge is not exterior");
      for (auto& r : emb.rotation) std::reverse(r.begin(), r.end());
      pg = PlaneGraph(g, emb.rotation);
      h = pg.find(root_edge->first, root_edge->second);
    }
    oh = h;
    start = h;
  }
  OuterplanarDump d;
  d.forest = build_outerplanar_tree(pg, oh, start);
  std::vector<int> step(d.forest.nodes.size(), 0);
  FoldOptions fo;
  fo.variant = variant;
  fo.sink = [&](const TableEvent& e) {
    int s = e.is_leaf ? 0 : ++step[e.node];
    d.tables.push_back({e.node, s, e.final, e.table});
  };
  d.best = extract_all(fold_vertex(d.forest, d.forest.root, k, g, fo), k);
  return d;
}

std::string table_tsv(const EdgeTable& t, const Graph& g) {
  std::ostringstream os;
  os << g.name(t.x) << '\t' << g.name(t.y);
  for (int c = 0; c <= t.kmax; ++c) os << "\tk=" << c;
  os << '\n';
  for (int r = 0; r < 4; ++r) {
    os << (r >> 1) << '\t' << (r & 1);
    for (int c = 0; c <= t.kmax; ++c) {
      os << '\t';
      if (is_absent(t.rows[r][c]))
        os << "∅";
      else
        os << t.rows[r][c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace dks

#include "dks/baker_tree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dks {

std::vector<Vertex> BakerForest::child_sequence(int v) const {
  std::vector<Vertex> z;
  const auto& ch = nodes[v].children;
  for (int c : ch) z.push_back(nodes[c].x);
  if (!ch.empty()) z.push_back(nodes[ch.back()].y);
  return z;
}

std::vector<int> BakerForest::postorder(int v) const {
  std::vector<int> out;
  std::vector<std::pair<int, std::size_t>> st{{v, 0}};
  while (!st.empty()) {
    auto& [u, i] = st.back();
    if (i < nodes[u].children.size()) {
      int c = nodes[u].children[i++];
      st.emplace_back(c, 0);
    } else {
      out.push_back(u);
      st.pop_back();
    }
  }
  return out;
}

namespace {

struct Blocks {
  std::vector<int> block_of;  // per plane edge, -1 when not kept
  std::vector<char> is_bridge;
};

Blocks compute_blocks(const PlaneGraph& pg, const std::vector<char>& keep) {
  std::vector<int> plane_edge;
  for (int e = 0; e < pg.edge_count(); ++e)
    if (keep[e]) plane_edge.push_back(e);
  BlockDecomposition bd;
  if (static_cast<int>(plane_edge.size()) == pg.graph().edge_count() &&
      pg.edge_count() == pg.graph().edge_count()) {
    // plane edges follow the graph's edge order
    bd = bridges_and_cutpoints(pg.graph());
  } else {
    Graph tmp(pg.vertex_count());
    for (int e : plane_edge) tmp.add_edge(pg.tail(2 * e), pg.head(2 * e));
    bd = bridges_and_cutpoints(tmp);
  }
  Blocks out;
  out.block_of.assign(pg.edge_count(), -1);
  out.is_bridge.assign(bd.blocks.size(), 0);
  for (std::size_t i = 0; i < plane_edge.size(); ++i) out.block_of[plane_edge[i]] = bd.edge_block[i];
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) out.is_bridge[b] = bd.blocks[b].size() == 1;
  return out;
}

struct LevelView {
  std::vector<char> keep;
  SubRotation sr;
  FaceSet faces;
  Blocks blocks;
};

LevelView make_view(const PlaneGraph& pg, std::vector<char> keep) {
  LevelView lv;
  lv.keep = std::move(keep);
  lv.sr = restrict_rotation(pg, lv.keep);
  lv.faces = trace_faces(lv.sr, pg.half_edge_count());
  lv.blocks = compute_blocks(pg, lv.keep);
  return lv;
}

int default_start(const PlaneGraph& pg, const LevelView& lv, int outer_face) {
  int best = -1;
  for (int h : lv.faces.cycles[outer_face]) {
    Vertex a = std::min(pg.tail(h), pg.head(h)), b = std::max(pg.tail(h), pg.head(h));
    if (best < 0) {
      best = h;
      continue;
    }
    Vertex ba = std::min(pg.tail(best), pg.head(best)), bb = std::max(pg.tail(best), pg.head(best));
    if (std::tie(a, b) < std::tie(ba, bb) ||
        (a == ba && b == bb && pg.tail(h) < pg.tail(best)))
      best = h;
  }
  return best;
}

// Builds the tree of one component from a start half-edge whose right face
// is the root face. Returns the root node.
int build_component(const PlaneGraph& pg, const LevelView& lv, int outer_face, int start,
                    int level, int comp, BakerForest& F) {
  const SubRotation& sr = lv.sr;
  auto block = [&](int h) { return lv.blocks.block_of[PlaneGraph::edge_of(h)]; };
  auto is_outer = [&](int h) { return lv.faces.face_of[h] == outer_face; };
  auto new_node = [&](NodeKind kind, Vertex x, Vertex y, int parent) {
    TreeNode nd;
    nd.kind = kind;
    nd.x = x;
    nd.y = y;
    nd.level = level;
    nd.component = comp;
    nd.parent = parent;
    F.nodes.push_back(nd);
    int id = static_cast<int>(F.nodes.size()) - 1;
    if (parent >= 0) F.nodes[parent].children.push_back(id);
    return id;
  };

  int w0 = start;
  while (!is_outer(w0)) w0 = sr.next[w0];
  std::vector<int> walk;
  for (int w = w0;;) {
    walk.push_back(w);
    w = sr.face_next(w);
    if (w == w0) break;
  }
  std::size_t cursor = 0;

  struct Frame {
    int node;
    std::vector<int> items;
    std::size_t idx;
  };
  std::vector<Frame> st;

  auto open_block = [&](Vertex c, int h0, int parent) {
    int nd = new_node(NodeKind::Face, c, c, parent);
    Frame fr{nd, {}, 0};
    if (lv.blocks.is_bridge[block(h0)]) {
      F.nodes[nd].bridge = true;
      fr.items = {h0, PlaneGraph::twin(h0)};
    } else {
      for (int g = h0;;) {
        fr.items.push_back(g);
        g = sr.right_next(g);
        if (g == h0) break;
      }
    }
    F.nodes[nd].half_edge = h0;
    st.push_back(std::move(fr));
    return nd;
  };

  auto run = [&]() {
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.idx == f.items.size()) {
        st.pop_back();
        continue;
      }
      int g = f.items[f.idx];
      Vertex a = pg.tail(g);
      if (cursor < walk.size() && pg.tail(walk[cursor]) == a && block(walk[cursor]) != block(g)) {
        int node = f.node;
        open_block(a, walk[cursor], node);
        continue;
      }
      bool second_side = F.nodes[f.node].bridge && f.idx == 1;
      ++f.idx;
      int node = f.node;
      if (is_outer(g)) {
        if (cursor >= walk.size() || walk[cursor] != g)
          throw Error(Error::Code::EmbeddingInconsistent, "outer walk out of step with tree");
        ++cursor;
        int leaf = new_node(NodeKind::Leaf, a, pg.head(g), node);
        F.nodes[leaf].half_edge = g;
        F.nodes[leaf].counted = pg.real(g) && !second_side;
        F.components[comp].leaves.push_back(leaf);
      } else {
        int ch = new_node(NodeKind::Face, a, pg.head(g), node);
        F.nodes[ch].chord = g;
        Frame fr{ch, {}, 0};
        for (int h = sr.next[g]; h != PlaneGraph::twin(g); h = sr.right_next(h)) fr.items.push_back(h);
        F.nodes[ch].half_edge = fr.items.front();
        st.push_back(std::move(fr));
      }
    }
  };

  Vertex c0 = pg.tail(start);
  std::vector<int> blocks_at_root;
  blocks_at_root.push_back(open_block(c0, start, -1));
  // open_block on a chord start: the root face chain starts at the chord
  run();
  while (cursor < walk.size()) {
    if (pg.tail(walk[cursor]) != c0)
      throw Error(Error::Code::EmbeddingInconsistent, "outer walk did not return to the root");
    blocks_at_root.push_back(open_block(c0, walk[cursor], -1));
    run();
  }
  if (blocks_at_root.size() == 1) return blocks_at_root[0];
  int root = new_node(NodeKind::Group, c0, c0, -1);
  for (int b : blocks_at_root) {
    F.nodes[b].parent = root;
    F.nodes[root].children.push_back(b);
  }
  return root;
}

void check_chaining(const BakerForest& F) {
  for (const auto& nd : F.nodes) {
    if (nd.children.empty()) continue;
    for (std::size_t i = 0; i + 1 < nd.children.size(); ++i)
      if (F.nodes[nd.children[i]].y != F.nodes[nd.children[i + 1]].x)
        throw Error(Error::Code::EmbeddingInconsistent, "tree labels do not chain");
    if (F.nodes[nd.children.front()].x != nd.x || F.nodes[nd.children.back()].y != nd.y)
      throw Error(Error::Code::EmbeddingInconsistent, "parent label does not span children");
  }
}

}  // namespace

int default_root_start(const PlaneGraph& pg, int outer_half_edge) {
  std::vector<char> keep(pg.edge_count(), 1);
  LevelView lv = make_view(pg, keep);
  return default_start(pg, lv, lv.faces.face_of[outer_half_edge]);
}

BakerForest build_outerplanar_tree(const PlaneGraph& pg, int outer_half_edge, int start) {
  BakerForest F;
  F.components.emplace_back();
  for (Vertex v = 0; v < pg.vertex_count(); ++v) F.components[0].vertices.push_back(v);
  if (outer_half_edge < 0) {
    TreeNode nd;
    nd.kind = NodeKind::Single;
    nd.x = nd.y = 0;
    nd.component = 0;
    nd.left = nd.right = {0};
    F.nodes.push_back(nd);
    F.root = F.components[0].root = 0;
    return F;
  }
  std::vector<char> keep(pg.edge_count(), 1);
  LevelView lv = make_view(pg, keep);
  int outer = lv.faces.face_of[outer_half_edge];
  if (start < 0) start = default_start(pg, lv, outer);
  if (lv.faces.face_of[PlaneGraph::twin(start)] == outer && lv.faces.face_of[start] != outer)
    throw Error(Error::Code::EmbeddingInconsistent, "root must be an interior face");
  F.root = F.components[0].root = build_component(pg, lv, outer, start, 1, 0, F);
  check_chaining(F);
  for (auto& nd : F.nodes) {
    nd.left = {nd.x};
    nd.right = {nd.y};
  }
  return F;
}

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
};

// First half-edge clockwise from h (exclusive) around tail(h) whose edge is kept.
int cw_kept(const PlaneGraph& pg, int h, const std::vector<char>& keep) {
  int g = h;
  for (int s = 0; s < pg.degree(pg.tail(h)); ++s) {
    g = pg.rot_prev(g);
    if (keep[PlaneGraph::edge_of(g)]) return g;
  }
  return -1;
}

}  // namespace

BakerForest build_leveled_forest(const LeveledEmbedding& le, int start) {
  const PlaneGraph& pg = le.plane;
  int n = pg.vertex_count();
  BakerForest F;
  F.b = std::max(1, le.b);
  if (le.outer_half_edge < 0) {
    return build_outerplanar_tree(pg, -1);
  }
  std::vector<LevelView> views(F.b + 1);
  for (int i = 1; i <= F.b; ++i) {
    std::vector<char> keep(pg.edge_count(), 0);
    for (int e = 0; e < pg.edge_count(); ++e)
      keep[e] = le.level[pg.tail(2 * e)] == i && le.level[pg.head(2 * e)] == i;
    views[i] = make_view(pg, std::move(keep));
  }
  // face id -> Face node, per level
  std::vector<std::vector<int>> face_node(F.b + 1);
  auto register_faces = [&](int i, int first_node) {
    face_node[i].assign(views[i].faces.count(), -1);
    for (int v = first_node; v < static_cast<int>(F.nodes.size()); ++v) {
      const TreeNode& nd = F.nodes[v];
      if (nd.kind != NodeKind::Face || nd.bridge) continue;
      face_node[i][views[i].faces.face_of[PlaneGraph::twin(nd.half_edge)]] = v;
    }
  };

  // level 1
  {
    ComponentInfo ci;
    ci.level = 1;
    for (Vertex v = 0; v < n; ++v)
      if (le.level[v] == 1) ci.vertices.push_back(v);
    F.components.push_back(ci);
    int outer = views[1].faces.face_of[le.outer_half_edge];
    if (start < 0) start = default_start(pg, views[1], outer);
    F.root = F.components[0].root = build_component(pg, views[1], outer, start, 1, 0, F);
    for (auto& nd : F.nodes) {
      nd.left = {nd.x};
      nd.right = {nd.y};
    }
  }
  int level_start = 0;
  // corner group of each half-edge leaving a level-i vertex into its face
  std::vector<int> corner_of(pg.half_edge_count(), -1);
  for (int i = 1; i < F.b; ++i) {
    register_faces(i, level_start);
    level_start = static_cast<int>(F.nodes.size());
    const LevelView& in = views[i + 1];
    UF uf(n);
    for (int e = 0; e < pg.edge_count(); ++e)
      if (in.keep[e]) uf.p[uf.find(pg.tail(2 * e))] = uf.find(pg.head(2 * e));
    std::vector<std::vector<Vertex>> groups(n);
    for (Vertex v = 0; v < n; ++v)
      if (le.level[v] == i + 1) groups[uf.find(v)].push_back(v);
    std::vector<std::vector<Vertex>> comps;
    for (auto& g : groups)
      if (!g.empty()) comps.push_back(g);
    std::sort(comps.begin(), comps.end());
    for (auto& verts : comps) {
      int comp = static_cast<int>(F.components.size());
      ComponentInfo ci;
      ci.level = i + 1;
      ci.vertices = verts;
      F.components.push_back(ci);
      std::vector<char> in_c(n, 0);
      for (Vertex v : verts) in_c[v] = 1;
      // a cross edge c -> d into level i
      int cross = -1;
      for (Vertex v : verts) {
        for (int h : pg.rotation(v))
          if (le.level[pg.head(h)] == i) {
            cross = h;
            break;
          }
        if (cross >= 0) break;
      }
      if (cross < 0) throw Error(Error::Code::EmbeddingInconsistent, "component without cross edge");
      int dq = cw_kept(pg, PlaneGraph::twin(cross), views[i].keep);
      if (dq < 0) throw Error(Error::Code::EmbeddingInconsistent, "enclosing face not found");
      int vf = face_node[i][views[i].faces.face_of[dq]];
      if (vf < 0) throw Error(Error::Code::EmbeddingInconsistent, "enclosing face has no tree vertex");
      if (F.nodes[vf].encloses >= 0)
        throw Error(Error::Code::EmbeddingInconsistent, "face encloses two components");
      F.nodes[vf].encloses = comp;
      F.components[comp].enclosing = vf;
      std::vector<Vertex> Z = F.child_sequence(vf);
      int t = static_cast<int>(Z.size()) - 1;
      Vertex x = Z.front(), y = Z.back();
      Vertex z = -1;
      if (x != y) {
        z = pg.head(pg.face_next(F.nodes[vf].chord));
      } else {
        for (int h : pg.rotation(x))
          if (in_c[pg.head(h)]) {
            z = pg.head(h);
            break;
          }
      }
      if (z < 0 || !in_c[z])
        throw Error(Error::Code::TriangulationIncomplete, "no root vertex for an enclosed component");
      int root;
      bool has_edges = false;
      for (int h : pg.rotation(z)) has_edges |= in.keep[PlaneGraph::edge_of(h)] != 0;
      if (!has_edges) {
        TreeNode nd;
        nd.kind = NodeKind::Single;
        nd.x = nd.y = z;
        nd.level = i + 1;
        nd.component = comp;
        F.nodes.push_back(nd);
        root = static_cast<int>(F.nodes.size()) - 1;
        TreeNode& s = F.nodes[root];
        s.lbn = 1;
        s.rbn = t + 1;
        s.pivot = 1;
      } else {
        int zx = pg.find(z, x);
        if (zx < 0) throw Error(Error::Code::TriangulationIncomplete, "root not adjacent to face");
        int s0 = cw_kept(pg, zx, in.keep);
        int outer = in.faces.face_of[s0];
        root = build_component(pg, in, outer, s0, i + 1, comp, F);
        F.nodes[root].x = F.nodes[root].y = z;
        // Positions of Z grouped by corner of the enclosing face; equal
        // consecutive labels (and both ends of a closed chain) share a corner.
        int fid = views[i].faces.face_of[dq];
        bool closed = x == y;
        int cyc = closed ? t : t + 1;
        std::vector<std::vector<int>> group_pos;
        std::vector<int> touched;
        {
          std::vector<int> gid(cyc, -1);
          int first = 0;
          while (first < cyc && Z[first] == Z[(first + cyc - 1) % cyc]) ++first;
          if (first == cyc) throw Error(Error::Code::EmbeddingInconsistent, "degenerate enclosing face");
          for (int c = 0; c < cyc; ++c) {
            int a = (first + c) % cyc;
            if (c > 0 && Z[a] == Z[(a + cyc - 1) % cyc]) {
              gid[a] = gid[(a + cyc - 1) % cyc];
            } else {
              gid[a] = static_cast<int>(group_pos.size());
              group_pos.emplace_back();
            }
            group_pos[gid[a]].push_back(a + 1);
            if (closed && a == 0) group_pos[gid[a]].push_back(t + 1);
          }
          for (int gi = 0; gi < static_cast<int>(group_pos.size()); ++gi) {
            int a0 = -1, a1 = -1;
            for (int c = 0; c < cyc; ++c) {
              int a = (first + c) % cyc;
              if (gid[a] != gi) continue;
              if (a0 < 0) a0 = a;
              a1 = a;
            }
            Vertex pv = Z[(a0 + cyc - 1) % cyc], u = Z[a0], nv = Z[(a1 + 1) % cyc];
            int e_in = pg.find(pv, u), e_out = pg.find(u, nv);
            if (e_in < 0 || e_out < 0) throw Error(Error::Code::EmbeddingInconsistent, "chain edge missing");
            bool left = views[i].faces.face_of[e_in] == fid;
            int guard = pg.degree(u);
            for (int h = left ? pg.rot_prev(PlaneGraph::twin(e_in)) : pg.rot_next(PlaneGraph::twin(e_in));
                 h != e_out; h = left ? pg.rot_prev(h) : pg.rot_next(h)) {
              if (--guard < 0) throw Error(Error::Code::EmbeddingInconsistent, "corner walk failed");
              corner_of[h] = gi;
              touched.push_back(h);
            }
          }
        }
        auto positions_of = [&](int h) -> const std::vector<int>& {
          if (corner_of[h] < 0) throw Error(Error::Code::EmbeddingInconsistent, "edge outside enclosing face");
          return group_pos[corner_of[h]];
        };
        const auto& leaves = F.components[comp].leaves;
        std::size_t s = leaves.size();
        // pivots: apex corners in nondecreasing order
        std::vector<int> piv(s, -1);
        for (std::size_t j = 0; j < s; ++j) {
          int lo = j == 0 ? 1 : piv[j - 1];
          for (int r : positions_of(PlaneGraph::twin(pg.face_next(F.nodes[leaves[j]].half_edge))))
            if (r >= lo && (piv[j] < 0 || r < piv[j])) piv[j] = r;
          if (piv[j] < 0) throw Error(Error::Code::NoDividingPoint, "pivot not found");
        }
        // dividing points between consecutive pivots
        for (std::size_t j = 0; j < s; ++j) {
          TreeNode& lf = F.nodes[leaves[j]];
          lf.pivot = piv[j];
          if (j == 0) {
            lf.lbn = 1;
            continue;
          }
          int arrive = F.nodes[leaves[j - 1]].half_edge;
          int depart = lf.half_edge;
          int q = -1;
          for (int g = pg.rot_prev(PlaneGraph::twin(arrive)); g != depart; g = pg.rot_prev(g))
            if (le.level[pg.head(g)] == i)
              for (int p : positions_of(PlaneGraph::twin(g)))
                if (p >= piv[j - 1] && p <= piv[j] && (q < 0 || p < q)) q = p;
          if (q < 0) throw Error(Error::Code::NoDividingPoint, "no dividing point for a leaf pair");
          lf.lbn = q;
        }
        for (std::size_t j = 0; j < s; ++j)
          F.nodes[leaves[j]].rbn = j + 1 < s ? F.nodes[leaves[j + 1]].lbn : t + 1;
        for (int v : F.postorder(root)) {
          TreeNode& nd = F.nodes[v];
          if (nd.children.empty()) continue;
          nd.lbn = F.nodes[nd.children.front()].lbn;
          nd.rbn = F.nodes[nd.children.back()].rbn;
        }
        for (int h : touched) corner_of[h] = -1;
      }
      F.components[comp].root = root;
      // boundaries
      const auto& U = F.nodes[vf].children;
      auto lb_of = [&](int l) -> const std::vector<Vertex>& {
        return l == t + 1 ? F.nodes[U[t - 1]].right : F.nodes[U[l - 1]].left;
      };
      auto rb_of = [&](int r) -> const std::vector<Vertex>& {
        return r == 0 ? F.nodes[U[0]].left : F.nodes[U[r - 1]].right;
      };
      for (int v : F.postorder(root)) {
        TreeNode& nd = F.nodes[v];
        std::vector<Vertex> L{nd.x}, R{nd.y};
        const auto& lb = lb_of(nd.lbn);
        const auto& rb = rb_of(nd.rbn - 1);
        L.insert(L.end(), lb.begin(), lb.end());
        R.insert(R.end(), rb.begin(), rb.end());
        nd.left = std::move(L);
        nd.right = std::move(R);
      }
    }
  }
  check_chaining(F);
  return F;
}

bool is_dividing_point(const PlaneGraph& pg, Vertex x1, Vertex x2, Vertex x3, Vertex y) {
  if (y == x1 || y == x3) return false;
  int a = pg.find(x2, x1), d = pg.find(x2, x3);
  if (a < 0 || d < 0) return false;
  for (int g = pg.rot_prev(a); g != a; g = pg.rot_prev(g)) {
    if (g == d) return false;
    if (pg.head(g) == y) return true;
  }
  return false;
}

std::string to_dot(const BakerForest& F, const Graph& g) {
  std::ostringstream os;
  os << "digraph baker {\n";
  auto names = [&](const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.name(vs[i]);
    return s;
  };
  for (std::size_t v = 0; v < F.nodes.size(); ++v) {
    const TreeNode& nd = F.nodes[v];
    os << "  n" << v << " [label=\"";
    if (nd.level > 1) os << nd.lbn << " ";
    os << "(" << g.name(nd.x) << "," << g.name(nd.y) << ")";
    if (nd.level > 1) os << " " << nd.rbn;
    os << "\\n[" << names(nd.left) << "] [" << names(nd.right) << "]\"";
    if (nd.kind == NodeKind::Leaf) os << " shape=box";
    os << "];\n";
    for (int c : nd.children) os << "  n" << v << " -> n" << c << ";\n";
    if (nd.encloses >= 0)
      os << "  n" << v << " -> n" << F.components[nd.encloses].root << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace dks

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dks/embedding.hpp"

namespace dks {

int choose_outer_half_edge(const PlaneGraph& pg, const std::optional<std::vector<Vertex>>& outer) {
  if (pg.half_edge_count() == 0) return -1;
  FaceSet fs = trace_faces(pg);
  int f = -1;
  if (outer) {
    f = match_face(pg, fs, *outer);
    if (f < 0) throw Error(Error::Code::EmbeddingInconsistent, "outer_face is not a face");
  } else {
    f = longest_face(pg, fs);
  }
  return fs.cycles[f][0];
}

std::vector<int> compute_levels(const PlaneGraph& pg, int outer_half_edge) {
  int n = pg.vertex_count();
  std::vector<int> level(n, 0);
  if (outer_half_edge < 0) {
    std::fill(level.begin(), level.end(), 1);
    return level;
  }
  FaceSet fs = trace_faces(pg);
  std::vector<char> face_seen(fs.count(), 0);
  std::vector<Vertex> frontier;
  int f0 = fs.face_of[outer_half_edge];
  face_seen[f0] = 1;
  for (int h : fs.cycles[f0])
    if (!level[pg.tail(h)]) {
      level[pg.tail(h)] = 1;
      frontier.push_back(pg.tail(h));
    }
  int cur = 1;
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (Vertex v : frontier)
      for (int h : pg.rotation(v)) {
        int f = fs.face_of[h];
        if (face_seen[f]) continue;
        face_seen[f] = 1;
        for (int g : fs.cycles[f])
          if (!level[pg.tail(g)]) {
            level[pg.tail(g)] = cur + 1;
            next.push_back(pg.tail(g));
          }
      }
    frontier.swap(next);
    ++cur;
  }
  for (Vertex v = 0; v < n; ++v)
    if (!level[v]) throw Error(Error::Code::EmbeddingInconsistent, "graph is not connected");
  return level;
}

std::vector<int> peel_levels(const PlaneGraph& pg, int outer_half_edge) {
  int n = pg.vertex_count();
  std::vector<int> level(n, 0);
  if (outer_half_edge < 0) {
    std::fill(level.begin(), level.end(), 1);
    return level;
  }
  FaceSet fs = trace_faces(pg);
  for (int h : fs.cycles[fs.face_of[outer_half_edge]]) level[pg.tail(h)] = 1;
  for (int cur = 1;; ++cur) {
    std::vector<char> keep(pg.edge_count(), 0);
    bool any_left = false;
    for (Vertex v = 0; v < n; ++v) any_left |= level[v] == 0;
    if (!any_left) break;
    for (int e = 0; e < pg.edge_count(); ++e)
      keep[e] = !level[pg.tail(2 * e)] && !level[pg.head(2 * e)];
    SubRotation sr = restrict_rotation(pg, keep);
    FaceSet rf = trace_faces(sr, pg.half_edge_count());
    std::vector<char> outer(rf.count(), 0);
    std::vector<Vertex> fresh;
    for (Vertex v = 0; v < n; ++v) {
      if (level[v]) continue;
      for (int h : pg.rotation(v)) {
        if (!level[pg.head(h)]) continue;
        // corner of the removed neighbour: first kept edge clockwise
        int g = h;
        bool found = false;
        for (int s = 0; s < pg.degree(v); ++s) {
          g = pg.rot_prev(g);
          if (keep[PlaneGraph::edge_of(g)]) {
            found = true;
            break;
          }
        }
        if (found)
          outer[rf.face_of[g]] = 1;
        else
          fresh.push_back(v);
      }
    }
    for (int f = 0; f < rf.count(); ++f)
      if (outer[f])
        for (int h : rf.cycles[f]) fresh.push_back(pg.tail(h));
    if (fresh.empty()) throw Error(Error::Code::EmbeddingInconsistent, "peeling stalled");
    for (Vertex v : fresh)
      if (!level[v]) level[v] = cur + 1;
  }
  return level;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

// Joins the level-(i+1) components sharing an enclosing level-i face. Each
// connector splits an annulus face between two consecutive inner runs of
// different components, so both halves keep a level-i corner.
int add_connectors(PlaneGraph& pg, const std::vector<int>& level, int inner) {
  int added = 0;
  UnionFind uf(pg.vertex_count());
  for (int h = 0; h < pg.half_edge_count(); h += 2)
    if (level[pg.tail(h)] == inner && level[pg.head(h)] == inner) uf.unite(pg.tail(h), pg.head(h));
  bool changed = true;
  while (changed) {
    changed = false;
    FaceSet fs = trace_faces(pg);
    for (const auto& cyc : fs.cycles) {
      int len = static_cast<int>(cyc.size());
      // runs of inner corners, as (first index, last index)
      std::vector<std::pair<int, int>> runs;
      int start = -1;
      for (int j = 0; j < len; ++j)
        if (level[pg.tail(cyc[j])] != inner) {
          start = j;
          break;
        }
      if (start < 0) continue;
      bool has_inner = false;
      for (int h : cyc) has_inner |= level[pg.tail(h)] == inner;
      if (!has_inner) continue;
      for (int s = 1; s <= len; ++s) {
        int j = (start + s) % len;
        bool in = level[pg.tail(cyc[j])] == inner;
        if (in && (runs.empty() || runs.back().second != (j - 1 + len) % len ||
                   level[pg.tail(cyc[(j - 1 + len) % len])] != inner))
          runs.emplace_back(j, j);
        else if (in)
          runs.back().second = j;
      }
      if (runs.size() < 2) continue;
      int r = static_cast<int>(runs.size());
      for (int a = 0; a < r; ++a) {
        int b = (a + 1) % r;
        Vertex c1 = pg.tail(cyc[runs[a].second]);
        Vertex c2 = pg.tail(cyc[runs[b].first]);
        if (uf.find(c1) == uf.find(c2)) continue;
        pg.insert_edge(c1, cyc[runs[a].second], c2, cyc[runs[b].first],
                       EdgeKind::FakeTriangulation);
        uf.unite(c1, c2);
        ++added;
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return added;
}

// Splits every face spanning two levels into triangles using cross-level
// diagonals only.
int triangulate_faces(PlaneGraph& pg, const std::vector<int>& level, FanAnchor anchor) {
  int added = 0;
  FaceSet fs = trace_faces(pg);
  std::vector<int> work;
  for (const auto& cyc : fs.cycles) work.push_back(cyc[0]);
  while (!work.empty()) {
    int s = work.back();
    work.pop_back();
    std::vector<int> cyc;
    for (int h = s;;) {
      cyc.push_back(h);
      h = pg.face_next(h);
      if (h == s) break;
    }
    int len = static_cast<int>(cyc.size());
    if (len <= 3) continue;
    int lo = 1 << 30, hi = 0;
    for (int h : cyc) {
      lo = std::min(lo, level[pg.tail(h)]);
      hi = std::max(hi, level[pg.tail(h)]);
    }
    if (lo == hi) continue;
    std::vector<int> inner_idx;
    for (int j = 0; j < len; ++j)
      if (level[pg.tail(cyc[j])] == hi) inner_idx.push_back(j);
    std::stable_sort(inner_idx.begin(), inner_idx.end(), [&](int a, int b) {
      Vertex va = pg.tail(cyc[a]), vb = pg.tail(cyc[b]);
      return anchor == FanAnchor::LowestId ? va < vb : va > vb;
    });
    int pick_i = -1, pick_o = -1;
    for (int pass = 0; pass < 2 && pick_i < 0; ++pass)
      for (int i : inner_idx) {
        for (int s2 = 2; s2 < len - 1; ++s2) {
          int o = (i + s2) % len;
          if (level[pg.tail(cyc[o])] != lo) continue;
          if (pass == 0 && pg.find(pg.tail(cyc[i]), pg.tail(cyc[o])) >= 0) continue;
          pick_i = i;
          pick_o = o;
          break;
        }
        if (pick_i >= 0) break;
      }
    if (pick_i < 0)
      throw Error(Error::Code::TriangulationIncomplete, "no diagonal for an annulus face");
    int h = pg.insert_edge(pg.tail(cyc[pick_i]), cyc[pick_i], pg.tail(cyc[pick_o]), cyc[pick_o],
                           EdgeKind::FakeTriangulation);
    ++added;
    work.push_back(h);
    work.push_back(PlaneGraph::twin(h));
  }
  return added;
}

}  // namespace

LeveledEmbedding build_leveled(const Graph& g, const std::vector<std::vector<Vertex>>& rotation,
                               std::optional<std::vector<Vertex>> outer_face, FanAnchor anchor) {
  LeveledEmbedding le;
  le.plane = PlaneGraph(g, rotation);
  if (!euler_consistent(le.plane))
    throw Error(Error::Code::EmbeddingInconsistent, "rotation system is not planar");
  le.outer_half_edge = choose_outer_half_edge(le.plane, outer_face);
  le.level = compute_levels(le.plane, le.outer_half_edge);
  le.b = le.level.empty() ? 0 : *std::max_element(le.level.begin(), le.level.end());
  for (int i = 2; i <= le.b; ++i) le.connectors += add_connectors(le.plane, le.level, i);
  le.triangulation_edges = triangulate_faces(le.plane, le.level, anchor);
  return le;
}

bool inter_level_faces_triangular(const LeveledEmbedding& le) {
  const PlaneGraph& pg = le.plane;
  FaceSet fs = trace_faces(pg);
  for (const auto& cyc : fs.cycles) {
    int lo = 1 << 30, hi = 0;
    for (int h : cyc) {
      lo = std::min(lo, le.level[pg.tail(h)]);
      hi = std::max(hi, le.level[pg.tail(h)]);
    }
    if (hi > lo + 1) return false;
    if (hi != lo && cyc.size() != 3) return false;
  }
  return true;
}

std::string to_dot(const LeveledEmbedding& le) {
  const PlaneGraph& pg = le.plane;
  std::ostringstream os;
  os << "graph leveled {\n";
  for (Vertex v = 0; v < pg.vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << pg.graph().name(v) << " L" << le.level[v] << "\"];\n";
  for (int h = 0; h < pg.half_edge_count(); h += 2) {
    os << "  v" << pg.tail(h) << " -- v" << pg.head(h);
    if (!pg.real(h)) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace dks

#include "dks/plane.hpp"

#include <algorithm>
#include <unordered_map>

namespace dks {

PlaneGraph::PlaneGraph(const Graph& g, const std::vector<std::vector<Vertex>>& rotation)
    : graph_(&g) {
  int n = g.vertex_count();
  if (static_cast<int>(rotation.size()) != n)
    throw Error(Error::Code::EmbeddingInconsistent, "rotation size mismatch");
  std::vector<std::vector<int>> out(n);  // half-edges leaving each vertex
  for (auto [u, v] : g.edges()) {
    int h = static_cast<int>(ends_.size());
    ends_.push_back(v);
    ends_.push_back(u);
    kinds_.push_back(EdgeKind::Real);
    out[u].push_back(h);
    out[v].push_back(h + 1);
  }
  rot_.assign(n, {});
  pos_.assign(ends_.size(), -1);
  std::vector<int> half(n, -1);  // head -> half-edge out of the current vertex
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<int>(rotation[v].size()) != g.degree(v))
      throw Error(Error::Code::EmbeddingInconsistent,
                  "rotation of " + g.name(v) + " does not list its neighbours");
    for (int h : out[v]) half[ends_[h]] = h;
    rot_[v].reserve(out[v].size());
    for (Vertex w : rotation[v]) {
      int h = w >= 0 && w < n ? half[w] : -1;
      if (h < 0 || pos_[h] >= 0)
        throw Error(Error::Code::EmbeddingInconsistent,
                    "rotation of " + g.name(v) + " is not a permutation of its neighbours");
      pos_[h] = static_cast<int>(rot_[v].size());
      rot_[v].push_back(h);
    }
    for (int h : out[v]) half[ends_[h]] = -1;
  }
}

int PlaneGraph::rot_next(int h) const {
  const auto& r = rot_[tail(h)];
  int p = pos_[h] + 1;
  return r[p == static_cast<int>(r.size()) ? 0 : p];
}

int PlaneGraph::rot_prev(int h) const {
  const auto& r = rot_[tail(h)];
  int p = pos_[h];
  return r[p == 0 ? r.size() - 1 : p - 1];
}

int PlaneGraph::find(Vertex u, Vertex v) const {
  for (int h : rot_[u])
    if (head(h) == v) return h;
  return -1;
}

int PlaneGraph::insert_edge(Vertex u, int after_u, Vertex v, int after_v, EdgeKind kind) {
  int h = static_cast<int>(ends_.size());
  ends_.push_back(v);
  ends_.push_back(u);
  kinds_.push_back(kind);
  pos_.push_back(-1);
  pos_.push_back(-1);
  auto place = [&](Vertex x, int after, int he) {
    auto& r = rot_[x];
    int p = after < 0 ? 0 : pos_[after] + 1;
    r.insert(r.begin() + p, he);
    for (int i = p; i < static_cast<int>(r.size()); ++i) pos_[r[i]] = i;
  };
  place(u, after_u, h);
  place(v, after_v, h + 1);
  return h;
}

FaceSet trace_faces(const PlaneGraph& pg) {
  FaceSet fs;
  int H = pg.half_edge_count();
  fs.face_of.assign(H, -1);
  for (int s = 0; s < H; ++s) {
    if (fs.face_of[s] >= 0) continue;
    int f = fs.count();
    fs.cycles.emplace_back();
    for (int h = s; fs.face_of[h] < 0; h = pg.face_next(h)) {
      fs.face_of[h] = f;
      fs.cycles.back().push_back(h);
    }
  }
  return fs;
}

SubRotation restrict_rotation(const PlaneGraph& pg, const std::vector<char>& keep_edge) {
  SubRotation sr;
  int H = pg.half_edge_count();
  sr.next.assign(H, -1);
  sr.prev.assign(H, -1);
  for (Vertex v = 0; v < pg.vertex_count(); ++v) {
    std::vector<int> kept;
    for (int h : pg.rotation(v))
      if (keep_edge[PlaneGraph::edge_of(h)]) kept.push_back(h);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      int a = kept[i], b = kept[(i + 1) % kept.size()];
      sr.next[a] = b;
      sr.prev[b] = a;
    }
  }
  return sr;
}

FaceSet trace_faces(const SubRotation& sr, int half_edges) {
  FaceSet fs;
  fs.face_of.assign(half_edges, -1);
  for (int s = 0; s < half_edges; ++s) {
    if (sr.next[s] < 0 || fs.face_of[s] >= 0) continue;
    int f = fs.count();
    fs.cycles.emplace_back();
    for (int h = s; fs.face_of[h] < 0; h = sr.face_next(h)) {
      fs.face_of[h] = f;
      fs.cycles.back().push_back(h);
    }
  }
  return fs;
}

bool euler_consistent(const PlaneGraph& pg) {
  int n = pg.vertex_count();
  // components over all edges via union-find
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int h = 0; h < pg.half_edge_count(); h += 2) parent[root(pg.tail(h))] = root(pg.head(h));
  FaceSet fs = trace_faces(pg);
  std::unordered_map<int, long> balance;  // V - E + F per component
  for (Vertex v = 0; v < n; ++v)
    if (pg.degree(v) > 0) balance[root(v)] += 1;
  for (int h = 0; h < pg.half_edge_count(); h += 2) balance[root(pg.tail(h))] -= 1;
  for (const auto& c : fs.cycles) balance[root(pg.tail(c[0]))] += 1;
  for (auto [c, b] : balance)
    if (b != 2) return false;
  return true;
}

std::vector<Vertex> face_vertices(const PlaneGraph& pg, const std::vector<int>& cycle) {
  std::vector<Vertex> out;
  out.reserve(cycle.size());
  for (int h : cycle) out.push_back(pg.tail(h));
  return out;
}

int match_face(const PlaneGraph& pg, const FaceSet& fs, const std::vector<Vertex>& cycle) {
  auto same_cyclic = [](const std::vector<Vertex>& a, std::vector<Vertex> b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t s = 0; s < b.size(); ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(s + i) % b.size()];
        if (ok) return true;
      }
      std::reverse(b.begin(), b.end());
    }
    return false;
  };
  for (int f = 0; f < fs.count(); ++f)
    if (same_cyclic(face_vertices(pg, fs.cycles[f]), cycle)) return f;
  return -1;
}

int longest_face(const PlaneGraph& pg, const FaceSet& fs) {
  int best = -1;
  std::size_t best_len = 0;
  Vertex best_min = 0;
  for (int f = 0; f < fs.count(); ++f) {
    auto vs = face_vertices(pg, fs.cycles[f]);
    Vertex mn = *std::min_element(vs.begin(), vs.end());
    if (best < 0 || vs.size() > best_len || (vs.size() == best_len && mn < best_min)) {
      best = f;
      best_len = vs.size();
      best_min = mn;
    }
  }
  return best;
}

}  // namespace dks

#include "dks/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>

namespace dks {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t r;
  do r = eng_();
  while (r >= limit);
  return r % n;
}

namespace {

Graph named_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  return g;
}

// Chords of a random triangulation of the polygon 0..len-1.
std::vector<std::pair<int, int>> random_triangulation(int len, Rng& rng) {
  std::vector<std::pair<int, int>> chords;
  std::vector<std::pair<int, int>> work{{0, len - 1}};
  while (!work.empty()) {
    auto [a, c] = work.back();
    work.pop_back();
    if (c - a < 2) continue;
    int apex = a + 1 + static_cast<int>(rng.below(c - a - 1));
    if (apex - a >= 2) {
      chords.emplace_back(a, apex);
      work.emplace_back(a, apex);
    }
    if (c - apex >= 2) {
      chords.emplace_back(apex, c);
      work.emplace_back(apex, c);
    }
  }
  return chords;
}

std::size_t take_count(std::size_t total, double rho) {
  return static_cast<std::size_t>(std::lround(std::clamp(rho, 0.0, 1.0) * static_cast<double>(total)));
}

}  // namespace

Generated gen_outerplanar(const GenSpec& spec) {
  if (spec.n < 2) throw Error(Error::Code::InfeasibleSpec, "outerplanar needs n >= 2");
  int blocks = std::clamp(spec.blocks, 1, spec.n - 1);
  Rng rng(spec.seed);
  // block sizes: each block adds size - 1 new vertices
  std::vector<int> sizes(blocks, 2);
  int extra = spec.n - 1 - blocks;
  for (int i = 0; i < extra; ++i) ++sizes[rng.below(blocks)];
  std::vector<Vertex> perm(spec.n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  Generated out;
  out.graph = named_graph(spec.n);
  int used = 0;
  for (int bi = 0; bi < blocks; ++bi) {
    std::vector<Vertex> poly;
    poly.push_back(bi == 0 ? perm[used++] : perm[rng.below(used)]);
    for (int j = 1; j < sizes[bi]; ++j) poly.push_back(perm[used++]);
    int len = static_cast<int>(poly.size());
    for (int j = 0; j < len && len > 1; ++j) {
      if (len == 2 && j == 1) break;
      out.graph.add_edge(poly[j], poly[(j + 1) % len]);
    }
    if (len >= 4) {
      auto chords = random_triangulation(len, rng);
      rng.shuffle(chords);
      chords.resize(take_count(chords.size(), spec.rho));
      for (auto [a, c] : chords) out.graph.add_edge(poly[a], poly[c]);
    }
  }
  return out;
}

Generated gen_bouterplanar(const GenSpec& spec) {
  if (spec.b <= 1) return gen_outerplanar(spec);
  int b = spec.b;
  if (spec.n < 3 * (b - 1) + 1)
    throw Error(Error::Code::InfeasibleSpec, "too few vertices for the requested rings");
  Rng rng(spec.seed);
  // ring sizes: outer rings at least 3, innermost 1 or at least 3
  std::vector<int> size(b, 3);
  int rest = spec.n - 3 * b;
  if (rest < 0) {
    size[b - 1] = 1;
    rest += 2;
  } else if (rest >= 0 && rng.chance(0.3)) {
    size[b - 1] = 1;
    rest += 2;
  }
  for (int i = 0; i < rest; ++i) {
    int r = static_cast<int>(rng.below(b));
    if (size[r] == 1) r = 0;
    ++size[r];
  }
  std::vector<std::vector<Vertex>> ring(b);
  Vertex next_id = 0;
  for (int r = 0; r < b; ++r)
    for (int j = 0; j < size[r]; ++j) ring[r].push_back(next_id++);
  int n = next_id;
  std::vector<std::vector<Vertex>> outer_nb(n), inner_nb(n);  // in ascending angular order
  std::set<std::pair<Vertex, Vertex>> edges;
  auto key = [](Vertex a, Vertex c) { return std::pair{std::min(a, c), std::max(a, c)}; };
  for (int r = 0; r + 1 < b; ++r) {
    const auto& O = ring[r];
    const auto& I = ring[r + 1];
    int a = static_cast<int>(O.size()), c = static_cast<int>(I.size());
    // zipper: a + c steps from (O[0], I[0]) around the annulus
    std::vector<int> steps(a + c, 0);
    for (int j = 0; j < c; ++j) steps[j] = 1;
    std::vector<std::pair<int, int>> cross;
    // an interleaving where one ring's steps are all consecutive revisits an
    // edge and does not describe a simple annulus; draw again
    for (bool simple = false; !simple;) {
      rng.shuffle(steps);
      int oi = 0, ii = 0;
      cross.assign(1, {0, 0});
      for (std::size_t s = 0; s + 1 < steps.size(); ++s) {
        if (steps[s])
          ++ii;
        else
          ++oi;
        cross.emplace_back(oi % a, ii % c);
      }
      auto sorted = cross;
      std::sort(sorted.begin(), sorted.end());
      simple = c == 1 || std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    std::vector<char> keep(cross.size(), 0);
    keep[rng.below(cross.size())] = 1;
    for (std::size_t j = 0; j < cross.size(); ++j)
      if (rng.chance(spec.rho)) keep[j] = 1;
    // per vertex, its zipper entries form a cyclic interval; order them
    // starting from the first entry of that interval
    int L = static_cast<int>(cross.size());
    auto ordered_partners = [&](int side, int idx) {
      std::vector<char> mine(L, 0);
      for (int j = 0; j < L; ++j) mine[j] = (side == 0 ? cross[j].first : cross[j].second) == idx;
      int start = 0;
      for (int j = 0; j < L; ++j)
        if (mine[j] && !mine[(j - 1 + L) % L]) start = j;
      std::vector<Vertex> out;
      for (int s2 = 0; s2 < L; ++s2) {
        int j = (start + s2) % L;
        if (!mine[j] || !keep[j]) continue;
        Vertex w = side == 0 ? I[cross[j].second] : O[cross[j].first];
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
      }
      return out;
    };
    for (int j = 0; j < L; ++j)
      if (keep[j]) edges.insert(key(O[cross[j].first], I[cross[j].second]));
    for (int j = 0; j < a; ++j) inner_nb[O[j]] = ordered_partners(0, j);
    for (int j = 0; j < c; ++j) outer_nb[I[j]] = ordered_partners(1, j);
  }
  // ring edges and innermost chords
  std::vector<std::vector<Vertex>> chord_nb(n);
  for (int r = 0; r < b; ++r) {
    const auto& R = ring[r];
    int s = static_cast<int>(R.size());
    if (s >= 3)
      for (int j = 0; j < s; ++j) edges.insert(key(R[j], R[(j + 1) % s]));
    if (r == b - 1 && s >= 4) {
      auto chords = random_triangulation(s, rng);
      rng.shuffle(chords);
      chords.resize(take_count(chords.size(), spec.rho));
      for (auto [p, q] : chords) {
        edges.insert(key(R[p], R[q]));
        chord_nb[R[p]].push_back(R[q]);
        chord_nb[R[q]].push_back(R[p]);
      }
    }
  }
  Generated out;
  out.graph = named_graph(n);
  for (auto [u, v] : edges) out.graph.add_edge(u, v);
  out.rotation.assign(n, {});
  for (int r = 0; r < b; ++r) {
    const auto& R = ring[r];
    int s = static_cast<int>(R.size());
    for (int j = 0; j < s; ++j) {
      Vertex v = R[j];
      auto& rot = out.rotation[v];
      if (r > 0) {
        const auto& o = outer_nb[v];
        rot.insert(rot.end(), o.begin(), o.end());
      }
      if (s >= 3) rot.push_back(R[(j + 1) % s]);
      if (r + 1 < b) {
        const auto& in = inner_nb[v];
        rot.insert(rot.end(), in.rbegin(), in.rend());
      }
      if (!chord_nb[v].empty()) {
        auto c = chord_nb[v];
        std::sort(c.begin(), c.end(), [&](Vertex p, Vertex q) {
          auto off = [&](Vertex w) {
            long pw = std::find(R.begin(), R.end(), w) - R.begin();
            return (pw - j + s) % s;
          };
          return off(p) < off(q);
        });
        rot.insert(rot.end(), c.begin(), c.end());
      }
      if (s >= 3) rot.push_back(R[(j - 1 + s) % s]);
    }
  }
  out.outer_face = ring[0];
  return out;
}

Generated gen_planar(const GenSpec& spec) {
  if (spec.n < 1) throw Error(Error::Code::InfeasibleSpec, "planar needs n >= 1");
  Rng rng(spec.seed);
  int n = spec.n;
  std::vector<std::pair<Vertex, Vertex>> all;
  if (n == 2) all.emplace_back(0, 1);
  if (n >= 3) {
    all = {{0, 1}, {1, 2}, {0, 2}};
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 2, 1}};
    for (Vertex v = 3; v < n; ++v) {
      std::size_t f = rng.below(faces.size());
      auto [a, c, d] = faces[f];
      all.emplace_back(a, v);
      all.emplace_back(c, v);
      all.emplace_back(d, v);
      faces[f] = {a, c, v};
      faces.push_back({c, d, v});
      faces.push_back({d, a, v});
    }
  }
  // random spanning tree kept, remaining edges with probability rho
  rng.shuffle(all);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Vertex, Vertex>> keep, other;
  for (auto e : all) {
    int a = find(e.first), c = find(e.second);
    if (a != c) {
      parent[a] = c;
      keep.push_back(e);
    } else {
      other.push_back(e);
    }
  }
  for (auto e : other)
    if (rng.chance(spec.rho)) keep.push_back(e);
  std::sort(keep.begin(), keep.end());
  Generated out;
  out.graph = named_graph(n);
  for (auto [u, v] : keep) out.graph.add_edge(u, v);
  return out;
}

}  // namespace dks

#include "dks/dp_bouterplanar.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace dks {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

void add_edge(EdgeList& es, Vertex a, Vertex b) {
  auto e = ordered(a, b);
  if (std::find(es.begin(), es.end(), e) == es.end()) es.push_back(e);
}

bool has(const EdgeList& es, Vertex a, Vertex b) {
  return std::find(es.begin(), es.end(), ordered(a, b)) != es.end();
}

std::vector<Vertex> distinct(std::initializer_list<const std::vector<Vertex>*> lists) {
  std::vector<Vertex> out;
  for (const auto* l : lists)
    for (Vertex v : *l)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

int index_of(const std::vector<Vertex>& vs, Vertex v) {
  return static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
}

// Row of a boundary pair (L, R) for an assignment over the vertex list U.
unsigned row_of(const std::vector<Vertex>& L, const std::vector<Vertex>& R,
                const std::vector<Vertex>& U, unsigned sigma) {
  unsigned row = 0;
  int j = 0;
  for (Vertex v : L) row |= ((sigma >> index_of(U, v)) & 1u) << j++;
  for (Vertex v : R) row |= ((sigma >> index_of(U, v)) & 1u) << j++;
  return row;
}

BoundaryTable blank(std::vector<Vertex> L, std::vector<Vertex> R, int vertices, int k) {
  BoundaryTable t;
  t.L = std::move(L);
  t.R = std::move(R);
  t.vertices = vertices;
  t.kmax = std::min(k, vertices);
  t.cells.assign(std::size_t{1} << t.width(), std::vector<Cell>(t.kmax + 1, kAbsent));
  return t;
}

void keep_boundary_edges(BoundaryTable& t, const EdgeList& from) {
  std::vector<Vertex> U = distinct({&t.L, &t.R});
  for (auto [a, b] : from)
    if (index_of(U, a) < static_cast<int>(U.size()) && index_of(U, b) < static_cast<int>(U.size()))
      add_edge(t.counted, a, b);
}

}  // namespace

BoundaryTable template_table(Vertex x, Vertex y, bool counted, int k) {
  BoundaryTable t = blank({x}, {y}, 2, k);
  t.cells[0][0] = 0;
  if (t.kmax >= 1) t.cells[1][1] = t.cells[2][1] = 0;
  if (t.kmax >= 2) t.cells[3][2] = counted ? 1 : 0;
  if (counted) add_edge(t.counted, x, y);
  return t;
}

BoundaryTable count_edge(const BoundaryTable& t, Vertex a, Vertex b, const Graph& g) {
  if (a == b || !g.has_edge(a, b) || has(t.counted, a, b)) return t;
  std::vector<Vertex> U = distinct({&t.L, &t.R});
  int ia = index_of(U, a), ib = index_of(U, b);
  if (ia == static_cast<int>(U.size()) || ib == static_cast<int>(U.size())) return t;
  BoundaryTable r = t;
  // first row position of each endpoint; conflicting rows are absent anyway
  auto pos = [&](Vertex v) {
    for (std::size_t j = 0; j < t.L.size(); ++j)
      if (t.L[j] == v) return static_cast<unsigned>(j);
    for (std::size_t j = 0; j < t.R.size(); ++j)
      if (t.R[j] == v) return static_cast<unsigned>(t.L.size() + j);
    return 0u;
  };
  unsigned both = (1u << pos(a)) | (1u << pos(b));
  for (unsigned row = 0; row < r.cells.size(); ++row)
    if ((row & both) == both)
      for (Cell& c : r.cells[row])
        if (!is_absent(c)) c += 1;
  add_edge(r.counted, a, b);
  return r;
}

BoundaryTable adjust(const BoundaryTable& t, const Graph& g) { return count_edge(t, t.L[0], t.R[0], g); }

BoundaryTable merge_tables(const BoundaryTable& a, const BoundaryTable& b, int k) {
  if (a.R != b.L) throw Error(Error::Code::BoundaryMismatch, "right boundary differs from left");
  std::vector<Vertex> U = distinct({&a.L, &a.R, &b.R});
  std::vector<Vertex> A = distinct({&a.L, &a.R}), B = distinct({&b.L, &b.R});
  unsigned shared = 0;
  int nshared = 0;
  for (std::size_t i = 0; i < U.size(); ++i)
    if (index_of(A, U[i]) < static_cast<int>(A.size()) &&
        index_of(B, U[i]) < static_cast<int>(B.size())) {
      shared |= 1u << i;
      ++nshared;
    }
  std::vector<unsigned> twice;  // masks of edges counted on both sides
  for (auto [p, q] : a.counted)
    if (has(b.counted, p, q)) twice.push_back((1u << index_of(U, p)) | (1u << index_of(U, q)));
  BoundaryTable t = blank(a.L, b.R, a.vertices + b.vertices - nshared, k);
  for (unsigned sigma = 0; sigma < (1u << U.size()); ++sigma) {
    const auto& ra = a.cells[row_of(a.L, a.R, U, sigma)];
    const auto& rb = b.cells[row_of(b.L, b.R, U, sigma)];
    auto& out = t.cells[row_of(t.L, t.R, U, sigma)];
    Cell delta = 0;
    for (unsigned m : twice)
      if ((sigma & m) == m) --delta;
    kernels::maxplus(out.data(), static_cast<int>(out.size()), ra.data(),
                     static_cast<int>(ra.size()), rb.data(), static_cast<int>(rb.size()),
                     __builtin_popcount(sigma & shared), delta);
  }
  for (auto& row : t.cells) kernels::normalize(row.data(), static_cast<int>(row.size()));
  keep_boundary_edges(t, a.counted);
  keep_boundary_edges(t, b.counted);
  return t;
}

BoundaryTable contract(const BoundaryTable& t) {
  if (t.L.empty() || t.L[0] != t.R[0])
    throw Error(Error::Code::BoundaryMismatch, "contract needs a shared innermost vertex");
  Vertex z = t.L[0];
  BoundaryTable r = blank({t.L.begin() + 1, t.L.end()}, {t.R.begin() + 1, t.R.end()}, t.vertices,
                          t.kmax);
  int li = static_cast<int>(t.L.size()), nl = li - 1;
  for (unsigned row = 0; row < r.cells.size(); ++row) {
    unsigned lb = row & ((1u << nl) - 1), rbits = row >> nl;
    for (unsigned zb = 0; zb < 2; ++zb) {
      unsigned old = (lb << 1 | zb) | ((rbits << 1 | zb) << li);
      kernels::max_into(r.cells[row].data(), t.cells[old].data(), r.kmax + 1, 0);
    }
  }
  for (auto [p, q] : t.counted)
    if (p != z && q != z) add_edge(r.counted, p, q);
  return r;
}

BoundaryTable extend(Vertex z, const BoundaryTable& t, int k, const Graph& g) {
  std::vector<Vertex> L{z}, R{z};
  L.insert(L.end(), t.L.begin(), t.L.end());
  R.insert(R.end(), t.R.begin(), t.R.end());
  BoundaryTable r = blank(L, R, t.vertices + 1, k);
  std::vector<Vertex> U = distinct({&t.L, &t.R});
  unsigned adj = 0;
  for (std::size_t i = 0; i < U.size(); ++i)
    if (g.has_edge(z, U[i])) adj |= 1u << i;
  int li = static_cast<int>(t.L.size()), nl = li + 1;
  for (unsigned sigma = 0; sigma < (1u << U.size()); ++sigma) {
    unsigned old = row_of(t.L, t.R, U, sigma);
    unsigned lb = old & ((1u << li) - 1), rbits = old >> li;
    unsigned out0 = (lb << 1) | ((rbits << 1) << nl);
    unsigned out1 = (lb << 1 | 1u) | ((rbits << 1 | 1u) << nl);
    int len = std::min(t.kmax, r.kmax) + 1;
    std::copy(t.cells[old].begin(), t.cells[old].begin() + len, r.cells[out0].begin());
    Cell m = __builtin_popcount(sigma & adj);
    kernels::max_into(r.cells[out1].data() + 1, t.cells[old].data(), std::min(t.kmax + 1, r.kmax),
                      m);
  }
  r.counted = t.counted;
  for (Vertex u : U)
    if (g.has_edge(z, u)) add_edge(r.counted, z, u);
  return r;
}

BoundaryTable create(const BakerForest& F, int v, int p, int k, const Graph& g) {
  const TreeNode& nd = F.nodes[v];
  const auto& U = F.nodes[F.components[nd.component].enclosing].children;
  int t = static_cast<int>(U.size());
  const std::vector<Vertex>& P = p == t + 1 ? F.nodes[U[t - 1]].right : F.nodes[U[p - 1]].left;
  std::vector<Vertex> L{nd.x}, R{nd.y};
  L.insert(L.end(), P.begin(), P.end());
  R.insert(R.end(), P.begin(), P.end());
  std::vector<Vertex> X = distinct({&L, &R});
  EdgeList es;
  auto real = [&](Vertex a, Vertex b) {
    if (a != b && g.has_edge(a, b)) add_edge(es, a, b);
  };
  real(nd.x, nd.y);
  for (std::size_t j = 0; j + 1 < P.size(); ++j) real(P[j], P[j + 1]);
  real(nd.x, P[0]);
  real(nd.y, P[0]);
  BoundaryTable r = blank(L, R, static_cast<int>(X.size()), k);
  for (unsigned sigma = 0; sigma < (1u << X.size()); ++sigma) {
    int size = __builtin_popcount(sigma);
    if (size > r.kmax) continue;
    Cell val = 0;
    for (auto [a, b] : es)
      if ((sigma >> index_of(X, a) & 1u) && (sigma >> index_of(X, b) & 1u)) ++val;
    Cell& c = r.cells[row_of(L, R, X, sigma)][size];
    c = std::max(c, val);
  }
  r.counted = es;
  return r;
}

TableRun run_table(const BakerForest& F, int k, const Graph& g, const BoundarySink& sink) {
  TableRun run;
  int n = static_cast<int>(F.nodes.size());
  run.calls.assign(n, 0);
  std::vector<std::optional<BoundaryTable>> tab(n);
  auto deps = [&](int v) {
    std::vector<int> d = F.nodes[v].children;
    if (F.nodes[v].encloses >= 0) d.push_back(F.components[F.nodes[v].encloses].root);
    return d;
  };
  auto take = [&](int u) {
    if (!tab[u]) throw Error(Error::Code::BoundaryMismatch, "table consumed twice");
    BoundaryTable t = std::move(*tab[u]);
    tab[u].reset();
    return t;
  };
  // explicit post-order over children and enclosed component roots
  std::vector<std::pair<int, std::size_t>> st{{F.root, 0}};
  std::vector<std::vector<int>> dep_cache(n);
  dep_cache[F.root] = deps(F.root);
  while (!st.empty()) {
    auto& [v, i] = st.back();
    if (i < dep_cache[v].size()) {
      int c = dep_cache[v][i++];
      dep_cache[c] = deps(c);
      st.emplace_back(c, 0);
      continue;
    }
    int node = v;
    st.pop_back();
    const TreeNode& nd = F.nodes[node];
    ++run.calls[node];
    BoundaryTable T;
    TraceEntry te{node, 0, 0};
    if (nd.kind == NodeKind::Leaf && nd.level == 1) {
      te.branch = 3;
      T = template_table(nd.x, nd.y, nd.counted, k);
    } else if (nd.kind == NodeKind::Leaf || nd.kind == NodeKind::Single) {
      te.branch = 4;
      te.pivot = nd.pivot;
      const auto& U = F.nodes[F.components[nd.component].enclosing].children;
      T = create(F, node, nd.pivot, k, g);
      // the slice also holds edges from y to the left part and from x to the
      // right part; they are counted while both ends are on the boundary
      for (int j = nd.pivot - 1; j >= nd.lbn; --j) {
        T = merge_tables(extend(nd.x, take(U[j - 1]), k, g), T, k);
        T = count_edge(T, nd.y, T.L[1], g);
      }
      for (int j = nd.pivot; j <= nd.rbn - 1; ++j) {
        T = merge_tables(T, extend(nd.y, take(U[j - 1]), k, g), k);
        T = count_edge(T, nd.x, T.R[1], g);
      }
    } else if (nd.encloses >= 0) {
      te.branch = 2;
      T = adjust(contract(take(F.components[nd.encloses].root)), g);
    } else {
      te.branch = 1;
      T = take(nd.children[0]);
      for (std::size_t j = 1; j < nd.children.size(); ++j) T = merge_tables(T, take(nd.children[j]), k);
      T = adjust(T, g);
    }
    if (T.L != nd.left || T.R != nd.right)
      throw Error(Error::Code::BoundaryMismatch, "table boundaries differ from the tree");
    run.cells += static_cast<long long>(T.cells.size()) * (T.kmax + 1);
    run.trace.push_back(te);
    if (sink) sink(node, T);
    tab[node] = std::move(T);
  }
  run.root = std::move(*tab[F.root]);
  return run;
}

std::vector<Cell> extract_root(const BoundaryTable& root, int k) {
  int top = std::min(k, root.kmax);
  std::vector<Cell> out(top + 1, kAbsent);
  for (const auto& row : root.cells)
    for (int c = 0; c <= top; ++c) out[c] = std::max(out[c], row[c]);
  return out;
}

std::string table_tsv(const BoundaryTable& t, const Graph& g) {
  std::ostringstream os;
  os << "L";
  for (Vertex v : t.L) os << ' ' << g.name(v);
  os << "\tR";
  for (Vertex v : t.R) os << ' ' << g.name(v);
  for (int c = 0; c <= t.kmax; ++c) os << "\tk=" << c;
  os << '\n';
  for (unsigned row = 0; row < t.cells.size(); ++row) {
    for (int j = 0; j < t.width(); ++j) os << ((row >> j) & 1u);
    os << '\t';
    for (int c = 0; c <= t.kmax; ++c) {
      os << '\t';
      if (is_absent(t.cells[row][c]))
        os << "∅";
      else
        os << t.cells[row][c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace dks

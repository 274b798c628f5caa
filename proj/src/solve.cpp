#include "dks/solve.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace dks {

namespace {

struct Piece {
  Graph owned;
  const Graph* source = nullptr;  // the input itself when it is connected
  const Graph& graph() const { return source ? *source : owned; }
  std::vector<Vertex> map;  // piece id -> input id
};

std::vector<Piece> split(const Graph& g) {
  std::vector<Piece> out;
  int count = 0;
  component_ids(g, &count);
  if (count == 1) {
    Piece p;
    p.source = &g;
    p.map.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) p.map[v] = v;
    out.push_back(std::move(p));
    return out;
  }
  for (const VertexSet& c : connected_components(g)) {
    Piece p;
    p.owned = induced_subgraph(g, c.members(), &p.map);
    out.push_back(std::move(p));
  }
  return out;
}

void check_k(const Graph& g, int k) {
  if (k < 0 || k > g.vertex_count())
    throw Error(Error::Code::KTooLarge, "k exceeds the vertex count");
}

std::vector<Vertex> witness_from(const std::vector<std::vector<Vertex>>& per_piece_sets) {
  std::vector<Vertex> out;
  for (const auto& s : per_piece_sets) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Drops vertices whose removal keeps the optimum; the survivors are a
// maximizing k-set.
std::vector<Vertex> reduce_witness(const Graph& g, int k, Cell target, const SolveOptions& opt) {
  std::vector<Vertex> alive(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) alive[v] = v;
  SolveOptions inner = opt;
  inner.witness = false;
  for (Vertex v = 0; v < g.vertex_count() && static_cast<int>(alive.size()) > k; ++v) {
    std::vector<Vertex> rest;
    for (Vertex u : alive)
      if (u != v) rest.push_back(u);
    GraphInput sub;
    sub.graph = induced_subgraph(g, rest);
    if (solve_bouterplanar(sub, inner).best[k] == target) alive = std::move(rest);
  }
  return alive;
}

}  // namespace

std::vector<Cell> combine_components(const std::vector<std::vector<Cell>>& parts, int k,
                                     std::vector<std::vector<int>>* choice) {
  std::vector<Cell> acc{0};
  std::vector<std::vector<Cell>> prefix{acc};
  for (const auto& p : parts) {
    int len = std::min(k + 1, static_cast<int>(acc.size() + p.size()) - 1);
    std::vector<Cell> next(len, kAbsent);
    kernels::maxplus(next.data(), len, acc.data(), static_cast<int>(acc.size()), p.data(),
                     static_cast<int>(p.size()), 0, 0);
    kernels::normalize(next.data(), len);
    acc = std::move(next);
    if (choice) prefix.push_back(acc);
  }
  if (choice) {
    // sizes per component attaining acc at every total
    choice->assign(acc.size(), std::vector<int>(parts.size(), 0));
    for (std::size_t total = 0; total < acc.size(); ++total) {
      if (is_absent(acc[total])) continue;
      int rem = static_cast<int>(total);
      for (int c = static_cast<int>(parts.size()) - 1; c >= 0; --c) {
        const auto& before = prefix[c];
        Cell target = prefix[c + 1][rem];
        for (int s = 0; s < static_cast<int>(parts[c].size()) && s <= rem; ++s) {
          int r = rem - s;
          if (r >= static_cast<int>(before.size()) || is_absent(before[r]) || is_absent(parts[c][s]))
            continue;
          if (before[r] + parts[c][s] == target) {
            (*choice)[total][c] = s;
            rem = r;
            break;
          }
        }
      }
    }
  }
  return acc;
}

SolveReport solve_outerplanar(const Graph& g, const SolveOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  check_k(g, opt.k);
  SolveReport rep;
  rep.solver = "outerplanar";
  auto pieces = split(g);
  rep.components = static_cast<int>(pieces.size());
  std::vector<std::vector<Cell>> parts;
  std::vector<BakerForest> forests(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Graph& pg_graph = pieces[i].graph();
    int kk = std::min(opt.k, pg_graph.vertex_count());
    if (pg_graph.vertex_count() == 1) {
      parts.push_back(kk >= 1 ? std::vector<Cell>{0, 0} : std::vector<Cell>{0});
      rep.tree_nodes += 1;
      continue;
    }
    OuterplanarEmbedding emb = recognize_outerplanar(pg_graph);
    PlaneGraph pg(pg_graph, emb.rotation);
    int oh = pg.find(emb.outer_edges[0].first, emb.outer_edges[0].second);
    forests[i] = build_outerplanar_tree(pg, oh);
    rep.tree_nodes += static_cast<long long>(forests[i].nodes.size());
    FoldOptions fo;
    fo.variant = opt.variant;
    if (opt.dump) {
      std::vector<int> step(forests[i].nodes.size(), 0);
      fo.sink = [&, i, step](const TableEvent& e) mutable {
        std::ostringstream os;
        os << "# component " << i << " node " << e.node;
        if (e.is_leaf)
          os << " leaf";
        else
          os << " merge " << ++step[e.node];
        if (e.final) os << " final";
        os << '\n' << table_tsv(e.table, pg_graph);
        opt.dump(os.str());
      };
    }
    if (opt.trace)
      for (int u : forests[i].postorder(forests[i].root)) {
        const TreeNode& nd = forests[i].nodes[u];
        std::ostringstream os;
        os << "component " << i << " node " << u << " (" << pg_graph.name(nd.x) << ','
           << pg_graph.name(nd.y) << ") children " << nd.children.size();
        rep.trace.push_back(os.str());
      }
    EdgeTable root = fold_vertex(forests[i], forests[i].root, kk, pg_graph, fo);
    parts.push_back(extract_all(root, kk));
    rep.table_calls += static_cast<long long>(forests[i].nodes.size());
  }
  std::vector<std::vector<int>> choice;
  rep.best = combine_components(parts, opt.k, opt.witness ? &choice : nullptr);
  if (opt.witness && opt.k < static_cast<int>(rep.best.size())) {
    std::vector<std::vector<Vertex>> sets;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      int s = choice[opt.k][i];
      if (s == 0) continue;
      std::vector<Vertex> local;
      if (pieces[i].graph().vertex_count() == 1)
        local = {0};
      else
        local = outerplanar_witness(forests[i], s, pieces[i].graph());
      std::vector<Vertex> mapped;
      for (Vertex v : local) mapped.push_back(pieces[i].map[v]);
      sets.push_back(mapped);
    }
    rep.witness = witness_from(sets);
  }
  rep.seconds = since(t0);
  return rep;
}

SolveReport solve_bouterplanar(const GraphInput& in, const SolveOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  const Graph& g = in.graph;
  check_k(g, opt.k);
  SolveReport rep;
  rep.solver = "bouterplanar";
  auto pieces = split(g);
  rep.components = static_cast<int>(pieces.size());
  std::vector<std::vector<Cell>> parts;
  for (auto& piece : pieces) {
    const Graph& sub = piece.graph();
    int n = sub.vertex_count();
    int kk = std::min(opt.k, n);
    if (n == 1) {
      parts.push_back(kk >= 1 ? std::vector<Cell>{0, 0} : std::vector<Cell>{0});
      continue;
    }
    std::vector<Vertex> back(g.vertex_count(), -1);
    for (Vertex v = 0; v < n; ++v) back[piece.map[v]] = v;
    std::vector<std::vector<Vertex>> rot;
    std::optional<std::vector<Vertex>> outer;
    if (in.rotation) {
      rot.assign(n, {});
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w : (*in.rotation)[piece.map[v]]) rot[v].push_back(back[w]);
      if (in.outer_face && back[in.outer_face->front()] >= 0) {
        outer.emplace();
        for (Vertex w : *in.outer_face) outer->push_back(back[w]);
      }
    } else if (is_outerplanar(sub)) {
      OuterplanarEmbedding emb = recognize_outerplanar(sub);
      rot = emb.rotation;
      PlaneGraph tmp(sub, rot);
      outer = outer_walk(tmp, tmp.find(emb.outer_edges[0].first, emb.outer_edges[0].second));
    } else {
      rot = planar_rotation(sub);
    }
    LeveledEmbedding le = build_leveled(sub, rot, outer, opt.anchor);
    BakerForest F = build_leveled_forest(le);
    rep.b = std::max(rep.b, F.b);
    rep.tree_nodes += static_cast<long long>(F.nodes.size());
    int comp = static_cast<int>(parts.size());
    BoundarySink sink;
    if (opt.dump)
      sink = [&](int node, const BoundaryTable& t) {
        std::ostringstream os;
        os << "# component " << comp << " node " << node << " level " << F.nodes[node].level
           << '\n' << table_tsv(t, sub);
        opt.dump(os.str());
      };
    TableRun run = run_table(F, kk, sub, sink);
    if (opt.trace)
      for (const TraceEntry& te : run.trace) {
        const TreeNode& nd = F.nodes[te.node];
        std::ostringstream os;
        os << "component " << comp << " node " << te.node << " (" << sub.name(nd.x) << ','
           << sub.name(nd.y) << ") level " << nd.level << " branch " << te.branch;
        if (te.branch == 4) os << " pivot " << te.pivot;
        rep.trace.push_back(os.str());
      }
    for (int c : run.calls) rep.table_calls += c;
    rep.cells += run.cells;
    parts.push_back(extract_root(run.root, kk));
  }
  rep.best = combine_components(parts, opt.k);
  if (opt.witness) rep.witness = reduce_witness(g, opt.k, rep.best[opt.k], opt);
  rep.seconds = since(t0);
  return rep;
}

SolveReport solve(const GraphInput& in, const SolveOptions& opt) {
  switch (opt.solver) {
    case SolverKind::Outerplanar:
      return solve_outerplanar(in.graph, opt);
    case SolverKind::Bouterplanar:
      return solve_bouterplanar(in, opt);
    case SolverKind::Auto:
      break;
  }
  if (is_outerplanar(in.graph)) return solve_outerplanar(in.graph, opt);
  return solve_bouterplanar(in, opt);
}

}  // namespace dks

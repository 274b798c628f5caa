#include "dks/ptas_probe.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "dks/oracle.hpp"
#include "dks/solve.hpp"

namespace dks {

std::vector<int> bfs_depths(const Graph& g, Vertex root) {
  int n = g.vertex_count();
  std::vector<int> d(n, -1);
  auto run = [&](Vertex s) {
    std::queue<Vertex> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u))
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          q.push(w);
        }
    }
  };
  if (root >= 0 && root < n) run(root);
  for (Vertex v = 0; v < n; ++v)
    if (d[v] < 0) run(v);
  return d;
}

std::vector<ClassDecomposition> baker_decompose(const Graph& g, int b, ProbeVariant variant,
                                                Vertex root) {
  if (b < 2) throw Error(Error::Code::InfeasibleSpec, "b must be at least 2");
  std::vector<int> depth = bfs_depths(g, root);
  std::vector<ClassDecomposition> out;
  for (int i = 0; i < b; ++i) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      bool congruent = depth[v] % b == i;
      if (congruent == (variant == ProbeVariant::Keep)) keep.push_back(v);
    }
    ClassDecomposition cd;
    cd.i = i;
    cd.kept = static_cast<int>(keep.size());
    std::vector<Vertex> map;
    Graph gi = induced_subgraph(g, keep, &map);
    for (const VertexSet& c : connected_components(gi)) {
      ClassPiece p;
      std::vector<Vertex> local;
      p.graph = induced_subgraph(gi, c.members(), &local);
      for (Vertex v : local) p.map.push_back(map[v]);
      if (p.graph.vertex_count() <= 2 || is_outerplanar(p.graph)) {
        p.levels = 1;
      } else {
        LeveledEmbedding le = build_leveled(p.graph, planar_rotation(p.graph), std::nullopt);
        p.levels = le.b;
      }
      p.certified = p.levels <= std::max(1, b - 1);
      cd.pieces.push_back(std::move(p));
    }
    out.push_back(std::move(cd));
  }
  if (variant == ProbeVariant::Classic) {
    int most = 0;
    for (const auto& cd : out) most = std::max(most, cd.kept);
    if (static_cast<long long>(most) * b < static_cast<long long>(b - 1) * g.vertex_count())
      throw std::logic_error("no class keeps a (1 - 1/b) fraction of the vertices");
  }
  return out;
}

int probe_b(double epsilon) {
  if (!(epsilon > 0)) throw Error(Error::Code::InfeasibleSpec, "epsilon must be positive");
  return std::max(2, static_cast<int>(std::ceil(1.0 / epsilon - 1e-9)));
}

ProbeRecord probe(const Graph& g, const ProbeOptions& opt) {
  int n = g.vertex_count();
  if (opt.k < 0 || opt.k > n) throw Error(Error::Code::KTooLarge, "k exceeds the vertex count");
  ProbeRecord r;
  r.n = n;
  r.m = g.edge_count();
  r.k = opt.k;
  r.epsilon = opt.epsilon;
  r.b = probe_b(opt.epsilon);
  r.variant = opt.variant == ProbeVariant::Keep ? "keep" : "classic";
  if (n <= kOracleCap) {
    r.opt = brute_force_densest_k(g, opt.k);
    r.reference = "oracle";
  } else {
    GraphInput in;
    in.graph = g;
    SolveOptions so;
    so.k = opt.k;
    r.opt = solve(in, so).best[opt.k];
    r.reference = "solver";
  }
  auto classes = baker_decompose(g, r.b, opt.variant, opt.root);
  for (const auto& cd : classes) {
    std::vector<std::vector<Cell>> parts;
    for (const auto& p : cd.pieces) {
      if (!p.certified) ++r.uncertified;
      GraphInput in;
      in.graph = p.graph;
      SolveOptions so;
      so.k = std::min(opt.k, p.graph.vertex_count());
      parts.push_back(solve(in, so).best);
    }
    std::vector<Cell> all = combine_components(parts, opt.k);
    Cell s = 0;
    for (Cell c : all)
      if (!is_absent(c)) s = std::max(s, c);
    r.per_class.push_back(s);
  }
  auto best = std::max_element(r.per_class.begin(), r.per_class.end());
  auto worst = std::min_element(r.per_class.begin(), r.per_class.end());
  r.best = *best;
  r.best_i = static_cast<int>(best - r.per_class.begin());
  r.worst_i = static_cast<int>(worst - r.per_class.begin());
  if (r.best > r.opt) throw std::logic_error("class solution exceeds the optimum");
  r.ratio = r.opt == 0 ? 1.0 : static_cast<double>(r.best) / r.opt;
  return r;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

std::string probe_csv_header() {
  return "instance,n,m,k,epsilon,b,variant,S,OPT,ratio,best_i,worst_i,uncertified,reference";
}

std::string probe_csv_row(const ProbeRecord& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  os << r.instance << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.epsilon << ',' << r.b
     << ',' << r.variant << ',' << r.best << ',' << r.opt << ',' << r.ratio << ',' << r.best_i
     << ',' << r.worst_i << ',' << r.uncertified << ',' << r.reference;
  return os.str();
}

ProbeSummary summarize(std::vector<ProbeRecord> records) {
  ProbeSummary s;
  s.records = std::move(records);
  s.histogram.assign(10, 0);
  for (std::size_t i = 0; i < s.records.size(); ++i) {
    double q = s.records[i].ratio;
    s.histogram[std::min(9, static_cast<int>(q * 10))]++;
    if (s.worst < 0 || q < s.records[s.worst].ratio) s.worst = static_cast<int>(i);
  }
  return s;
}

}  // namespace dks

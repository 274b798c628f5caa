#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "dks/bench.hpp"
#include "dks/generators.hpp"
#include "dks/oracle.hpp"
#include "dks/ptas_probe.hpp"
#include "dks/slices.hpp"
#include "dks/solve.hpp"
#include "support.hpp"

using namespace dks;
using Clock = std::chrono::steady_clock;

namespace {

const std::string kData = DKS_TEST_DATA;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string cell(Cell c) { return is_absent(c) ? "-" : std::to_string(c); }

Graph example7() { return read_graph_file(kData + "/example7.txt").graph; }

// Seeded corpora shared by several criteria.
std::vector<Generated> outerplanar_corpus() {
  std::vector<Generated> out;
  for (int s = 1; out.size() < 200; ++s) {
    GenSpec sp;
    sp.n = 4 + s % 9;
    sp.rho = (s % 5) / 4.0;
    sp.seed = s;
    sp.blocks = 1 + s % 3;
    out.push_back(gen_outerplanar(sp));
  }
  return out;
}

std::vector<Generated> bouterplanar_corpus(int count, int nmin, int nmax, std::uint64_t base) {
  std::vector<Generated> out;
  for (int s = 1; static_cast<int>(out.size()) < count; ++s) {
    GenSpec sp;
    sp.b = 2 + s % 2;
    sp.n = nmin + s % (nmax - nmin + 1);
    sp.rho = 0.3 + (s % 4) / 5.0;
    sp.seed = base + s;
    try {
      out.push_back(gen_bouterplanar(sp));
    } catch (const Error& e) {
      if (e.code() != Error::Code::InfeasibleSpec) throw;
    }
  }
  return out;
}

GraphInput as_input(const Generated& g) {
  GraphInput in;
  in.graph = g.graph;
  if (!g.rotation.empty()) in.rotation = g.rotation;
  if (!g.outer_face.empty()) in.outer_face = g.outer_face;
  return in;
}

std::vector<Cell> column(const std::vector<int>& v) { return {v.begin(), v.end()}; }

bool golden_tables(std::string& detail) {
  auto t0 = Clock::now();
  Graph g = example7();
  auto ref = testsupport::load_ref_tables(kData + "/worked_tables.txt");
  OuterplanarDump d = dump_outerplanar(g, 7, std::pair{g.find("c"), g.find("b")});
  // name the produced tables by label; HN and PI are intermediate merges
  std::map<std::string, const EdgeTable*> got;
  auto label = [&](const EdgeTable& t) { return g.name(t.x) + g.name(t.y); };
  std::map<std::string, std::string> by_label = {
      {"cb", "P"}, {"ba", "L"}, {"ae", "M"}, {"ef", "N"}, {"fg", "O"}, {"gd", "R"},
      {"dc", "Q"}, {"be", "H"}, {"bf", "HN"}, {"bg", "I"}, {"gc", "K"}, {"cg", "PI"},
      {"cc", "J"}};
  for (const DumpedTable& t : d.tables) {
    auto it = by_label.find(label(t.table));
    if (it != by_label.end()) got[it->second] = &t.table;
  }
  int mismatches = 0, compared = 0;
  std::ostringstream os;
  for (const auto& [name, rt] : ref) {
    auto it = got.find(name);
    if (it == got.end()) {
      os << " missing " << name << ';';
      ++mismatches;
      continue;
    }
    const EdgeTable& t = *it->second;
    if (g.name(t.x) != rt.x || g.name(t.y) != rt.y) {
      os << ' ' << name << " label;";
      ++mismatches;
    }
    for (int r = 0; r < 4; ++r) {
      const auto& want = rt.rows[r];
      if (static_cast<int>(want.size()) != t.kmax + 1) {
        os << ' ' << name << " width;";
        ++mismatches;
        continue;
      }
      for (int k = 0; k <= t.kmax; ++k) {
        ++compared;
        Cell have = t.at(r >> 1, r & 1, k);
        if (is_absent(have) != is_absent(want[k]) || (!is_absent(have) && have != want[k])) {
          ++mismatches;
          os << ' ' << name << '(' << (r >> 1) << (r & 1) << ",k=" << k << ") expected "
             << cell(want[k]) << " got " << cell(have) << ';';
        }
      }
    }
  }
  // an independent count for the disputed cells
  auto brute = testsupport::naive_best(g);
  double secs = since(t0);
  detail = std::to_string(compared) + " cells, " + std::to_string(mismatches) + " mismatches" +
           os.str() + " brute-force k=4 optimum " + std::to_string(brute[4]) + ", " +
           std::to_string(secs) + " s";
  return mismatches == 0 && secs < 1.0;
}

bool final_answers(std::string& detail) {
  auto t0 = Clock::now();
  Graph g = example7();
  std::vector<Cell> expected{0, 0, 1, 3, 4, 6, 8, 10};
  OuterplanarDump d = dump_outerplanar(g, 7, std::pair{g.find("c"), g.find("b")});
  std::vector<Cell> got = d.best;
  std::vector<int> brute = testsupport::naive_best(g);
  double secs = since(t0);
  std::ostringstream os;
  os << "got";
  for (Cell c : got) os << ' ' << c;
  os << " expected";
  for (Cell c : expected) os << ' ' << c;
  os << " brute force";
  for (int c : brute) os << ' ' << c;
  os << ", " << secs << " s";
  detail = os.str();
  return got == expected && secs < 1.0;
}

bool oracle_outerplanar(std::string& detail) {
  auto t0 = Clock::now();
  int bad = 0, total = 0, witness_bad = 0;
  for (const Generated& gen : outerplanar_corpus()) {
    const Graph& g = gen.graph;
    SolveOptions so;
    so.k = g.vertex_count();
    std::vector<Cell> dp = solve_outerplanar(g, so).best;
    for (int k = 0; k <= so.k; ++k) {
      if (dp[k] != brute_force_densest_k(g, k)) {
        ++bad;
        break;
      }
    }
    so.k = g.vertex_count() / 2;
    so.witness = true;
    SolveReport w = solve_outerplanar(g, so);
    if (static_cast<int>(w.witness.size()) != so.k ||
        testsupport::induced_edges(g, w.witness) != w.best[so.k])
      ++witness_bad;
    ++total;
  }
  double secs = since(t0);
  detail = std::to_string(total) + " instances, " + std::to_string(bad) + " mismatches, " +
           std::to_string(witness_bad) + " bad witnesses, " + std::to_string(secs) + " s";
  return total >= 200 && bad == 0 && witness_bad == 0 && secs < 60;
}

bool oracle_bouterplanar(std::string& detail) {
  auto t0 = Clock::now();
  int bad = 0, total = 0;
  std::map<int, int> per_b;
  for (const Generated& gen : bouterplanar_corpus(120, 6, 14, 1000)) {
    SolveOptions so;
    so.k = gen.graph.vertex_count();
    SolveReport rep = solve_bouterplanar(as_input(gen), so);
    ++per_b[rep.b];
    OracleResult orc = brute_force_all(gen.graph);
    if (rep.best != column(orc.best)) ++bad;
    ++total;
  }
  double secs = since(t0);
  std::ostringstream os;
  os << total << " instances (";
  for (auto [b, c] : per_b) os << "b=" << b << ": " << c << ' ';
  os << "), " << bad << " mismatches, " << secs << " s";
  detail = os.str();
  bool levels_ok = per_b.size() == 2 && per_b.count(2) && per_b.count(3);
  return total >= 100 && bad == 0 && levels_ok && secs < 600;
}

bool table_soundness(std::string& detail) {
  int instances = 0, nodes = 0, bad = 0;
  for (const Generated& gen : bouterplanar_corpus(30, 6, 12, 5000)) {
    const Graph& g = gen.graph;
    LeveledEmbedding le = build_leveled(g, gen.rotation, gen.outer_face);
    BakerForest F = build_leveled_forest(le);
    int k = g.vertex_count();
    run_table(F, k, g, [&](int v, const BoundaryTable& t) {
      BoundaryTable ref = brute_force_slice_table(materialize_slice(F, v, g), k);
      ++nodes;
      if (ref.L != t.L || ref.R != t.R || ref.kmax != t.kmax || ref.cells != t.cells) ++bad;
    });
    ++instances;
  }
  detail = std::to_string(instances) + " instances, " + std::to_string(nodes) +
           " tree vertices, " + std::to_string(bad) + " mismatching tables";
  return instances >= 20 && bad == 0;
}

bool cross_solver(std::string& detail) {
  int bad = 0, total = 0, wrong_b = 0;
  for (const Generated& gen : outerplanar_corpus()) {
    SolveOptions so;
    so.k = gen.graph.vertex_count();
    GraphInput in;
    in.graph = gen.graph;
    SolveReport a = solve_outerplanar(gen.graph, so);
    SolveReport b = solve_bouterplanar(in, so);
    if (b.b != 1) ++wrong_b;
    if (a.best != b.best) ++bad;
    ++total;
  }
  detail = std::to_string(total) + " instances, " + std::to_string(bad) + " mismatches, " +
           std::to_string(wrong_b) + " not leveled as b=1";
  return total >= 200 && bad == 0 && wrong_b == 0;
}

double median_solve(const std::function<double()>& run, int reps) {
  std::vector<double> t;
  for (int r = 0; r < reps; ++r) t.push_back(run());
  return median(t);
}

bool scaling_outerplanar(std::string& detail) {
  auto t0 = Clock::now();
  std::vector<double> ns, ts;
  std::ostringstream os;
  for (int n : {1000, 10000, 100000}) {
    GenSpec sp;
    sp.n = n;
    sp.rho = 0.5;
    sp.seed = 7;
    Graph g = gen_outerplanar(sp).graph;
    SolveOptions so;
    so.k = 10;
    double t = median_solve([&] { return solve_outerplanar(g, so).seconds; }, 5);
    ns.push_back(n);
    ts.push_back(t);
    os << "n=" << n << " " << t << " s; ";
  }
  double slope = loglog_slope(ns, ts);
  double secs = since(t0);
  os << "slope " << slope << ", " << secs << " s total";
  detail = os.str();
  return slope <= 1.25 && secs < 600;
}

bool scaling_levels(std::string& detail) {
  auto t0 = Clock::now();
  std::map<int, std::vector<double>> times;
  for (int b : {2, 3}) {
    for (int s = 1; s <= 15; ++s) {
      GenSpec sp;
      sp.n = 200;
      sp.b = b;
      sp.rho = 0.5;
      sp.seed = 100 * b + s;
      Generated gen = gen_bouterplanar(sp);
      GraphInput in = as_input(gen);
      SolveOptions so;
      so.k = 10;
      times[b].push_back(median_solve([&] { return solve_bouterplanar(in, so).seconds; }, 3));
    }
  }
  double m2 = median(times[2]), m3 = median(times[3]);
  double secs = since(t0);
  std::ostringstream os;
  os << "median b=2 " << m2 << " s, b=3 " << m3 << " s, ratio " << m3 / m2 << ", " << secs
     << " s total";
  detail = os.str();
  return m3 / m2 <= 24 && secs < 600;
}

// Structural checks on one leveled forest; returns a failure description.
std::string check_forest(const BakerForest& F, const LeveledEmbedding& le, const Graph& g) {
  const PlaneGraph& pg = le.plane;
  for (const TreeNode& nd : F.nodes) {
    if (!nd.children.empty()) {
      if (F.nodes[nd.children.front()].x != nd.x || F.nodes[nd.children.back()].y != nd.y)
        return "parent label does not span children";
      for (std::size_t i = 0; i + 1 < nd.children.size(); ++i)
        if (F.nodes[nd.children[i]].y != F.nodes[nd.children[i + 1]].x)
          return "children labels do not chain";
    }
    if (static_cast<int>(nd.left.size()) != nd.level || static_cast<int>(nd.right.size()) != nd.level)
      return "boundary length differs from level";
    if (nd.left.front() != nd.x || nd.right.front() != nd.y) return "boundary does not start at label";
  }
  for (const ComponentInfo& ci : F.components) {
    if (ci.level == 1) continue;
    std::vector<Vertex> Z = F.child_sequence(ci.enclosing);
    int t = static_cast<int>(Z.size()) - 1;
    int prev_rbn = 1;
    for (std::size_t j = 0; j < ci.leaves.size(); ++j) {
      const TreeNode& lf = F.nodes[ci.leaves[j]];
      if (lf.lbn != prev_rbn) return "lbn does not continue the previous rbn";
      if (lf.lbn > lf.rbn || lf.pivot < lf.lbn || lf.pivot > lf.rbn) return "pivot outside range";
      if (lf.x != lf.y) {
        Vertex z = Z[lf.pivot - 1];
        if (pg.find(lf.x, z) < 0 || pg.find(lf.y, z) < 0) return "pivot not adjacent to the leaf";
      }
      prev_rbn = lf.rbn;
    }
    if (!ci.leaves.empty() && prev_rbn != t + 1) return "last rbn does not close the face";
  }
  Slice whole = materialize_slice(F, F.root, g);
  if (static_cast<int>(whole.vertices.size()) != g.vertex_count() ||
      static_cast<int>(whole.edges.size()) != g.edge_count())
    return "root slice is not the whole graph";
  if (peel_levels(pg, le.outer_half_edge) != compute_levels(pg, le.outer_half_edge))
    return "peeled levels differ from computed levels";
  return {};
}

// Exterior half-edges of the level-1 outer face usable as tree roots.
std::vector<int> root_starts(const LeveledEmbedding& le) {
  const PlaneGraph& pg = le.plane;
  std::vector<char> keep(pg.edge_count(), 0);
  for (int e = 0; e < pg.edge_count(); ++e)
    keep[e] = le.level[pg.tail(2 * e)] == 1 && le.level[pg.head(2 * e)] == 1;
  SubRotation sr = restrict_rotation(pg, keep);
  FaceSet fs = trace_faces(sr, pg.half_edge_count());
  return fs.cycles[fs.face_of[le.outer_half_edge]];
}

bool structural(std::string& detail) {
  int instances = 0, root_runs = 0, few_roots = 0, differing_triangulations = 0;
  std::vector<std::string> failures;
  auto check = [&](const GraphInput& in, const std::string& name) {
    const Graph& g = in.graph;
    std::vector<std::vector<Vertex>> rot;
    std::optional<std::vector<Vertex>> outer;
    if (in.rotation) {
      rot = *in.rotation;
      outer = in.outer_face;
    } else if (is_outerplanar(g)) {
      rot = recognize_outerplanar(g).rotation;
    } else {
      rot = planar_rotation(g);
    }
    int k = g.vertex_count();
    std::vector<Cell> reference;
    for (FanAnchor anchor : {FanAnchor::LowestId, FanAnchor::HighestId}) {
      LeveledEmbedding le = build_leveled(g, rot, outer, anchor);
      if (!inter_level_faces_triangular(le)) failures.push_back(name + ": untriangulated face");
      std::vector<int> starts = root_starts(le);
      if (starts.size() < 5) ++few_roots;
      for (std::size_t r = 0; r < std::min<std::size_t>(starts.size(), 6); ++r) {
        BakerForest F = build_leveled_forest(le, starts[r]);
        std::string why = check_forest(F, le, g);
        if (!why.empty()) failures.push_back(name + ": " + why);
        std::vector<Cell> best = extract_root(run_table(F, k, g).root, k);
        if (reference.empty())
          reference = best;
        else if (best != reference)
          failures.push_back(name + ": answer depends on root or triangulation");
        ++root_runs;
      }
    }
    LeveledEmbedding lo = build_leveled(g, rot, outer, FanAnchor::LowestId);
    LeveledEmbedding hi = build_leveled(g, rot, outer, FanAnchor::HighestId);
    std::set<std::pair<Vertex, Vertex>> flo, fhi;
    for (int h = 0; h < lo.plane.half_edge_count(); h += 2)
      if (lo.plane.kind(h) == EdgeKind::FakeTriangulation)
        flo.insert(std::minmax(lo.plane.tail(h), lo.plane.head(h)));
    for (int h = 0; h < hi.plane.half_edge_count(); h += 2)
      if (hi.plane.kind(h) == EdgeKind::FakeTriangulation)
        fhi.insert(std::minmax(hi.plane.tail(h), hi.plane.head(h)));
    if (flo != fhi) ++differing_triangulations;
    ++instances;
  };
  for (const Generated& gen : outerplanar_corpus()) {
    int comps = 0;
    component_ids(gen.graph, &comps);
    if (comps == 1) check(as_input(gen), "outerplanar");
  }
  for (const Generated& gen : bouterplanar_corpus(120, 6, 14, 1000)) check(as_input(gen), "bouterplanar");
  for (int s = 1; s <= 30; ++s) {
    GenSpec sp;
    sp.n = 8 + s % 9;
    sp.rho = 0.4 + (s % 3) / 5.0;
    sp.seed = 9000 + s;
    GraphInput in;
    in.graph = gen_planar(sp).graph;
    check(in, "planar");
  }
  std::ostringstream os;
  os << instances << " instances, " << root_runs << " rooted runs, " << few_roots
     << " embeddings with fewer than 5 exterior edges (all used), " << differing_triangulations
     << " instances where the two triangulations differ, " << failures.size() << " failures";
  for (std::size_t i = 0; i < std::min<std::size_t>(failures.size(), 5); ++i)
    os << "; " << failures[i];
  detail = os.str();
  return failures.empty() && differing_triangulations > 0;
}

bool ptas_probe(std::string& detail) {
  int runs = 0, out_of_range = 0, instances = 0;
  double worst_keep = 1, worst_classic = 1;
  for (int s = 1; instances < 60; ++s) {
    GenSpec sp;
    sp.n = 6 + s % 11;
    sp.rho = 0.3 + (s % 5) / 6.0;
    sp.seed = 20000 + s;
    Graph g = gen_planar(sp).graph;
    if (g.vertex_count() > 16) continue;
    ++instances;
    for (ProbeVariant v : {ProbeVariant::Keep, ProbeVariant::Classic})
      for (double eps : {0.5, 1.0 / 3}) {
        ProbeOptions po;
        po.k = 1 + s % g.vertex_count();
        po.epsilon = eps;
        po.variant = v;
        ProbeRecord r = probe(g, po);
        if (r.opt != testsupport::naive_best(g)[po.k]) ++out_of_range;
        if (!(r.ratio >= 0 && r.ratio <= 1)) ++out_of_range;
        (v == ProbeVariant::Keep ? worst_keep : worst_classic) =
            std::min(v == ProbeVariant::Keep ? worst_keep : worst_classic, r.ratio);
        ++runs;
      }
  }
  ProbeOptions po;
  po.k = 4;
  po.epsilon = 0.5;
  ProbeRecord star = probe(star_graph(8), po);
  std::ostringstream os;
  os << instances << " planar instances, " << runs << " probes, " << out_of_range
     << " invalid; worst keep ratio " << worst_keep << ", worst classic ratio " << worst_classic
     << "; star keep ratio " << star.ratio << " (S=" << star.best << ", OPT=" << star.opt << ")";
  detail = os.str();
  return instances >= 50 && out_of_range == 0 && star.ratio < 0.5;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
      {"golden tables", golden_tables},
      {"final answers", final_answers},
      {"oracle equivalence outerplanar", oracle_outerplanar},
      {"oracle equivalence b-outerplanar", oracle_bouterplanar},
      {"intermediate table soundness", table_soundness},
      {"cross-solver consistency", cross_solver},
      {"outerplanar scaling", scaling_outerplanar},
      {"level scaling", scaling_levels},
      {"structural invariants", structural},
      {"ptas probe", ptas_probe},
  };
  std::vector<int> which;
  if (argc > 1)
    which.push_back(std::atoi(argv[1]));
  else
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) which.push_back(i);
  bool all = true;
  for (int i : which) {
    if (i < 1 || i > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << i << '\n';
      return 2;
    }
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i - 1].second(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << i << " (" << criteria[i - 1].first << "): "
              << (ok ? "PASS" : "FAIL") << " - " << detail << std::endl;
    all = all && ok;
  }
  return all ? 0 : 1;
}

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dks/bench.hpp"
#include "dks/generators.hpp"
#include "dks/io.hpp"
#include "dks/oracle.hpp"
#include "dks/ptas_probe.hpp"
#include "dks/solve.hpp"

using namespace dks;

namespace {

enum Exit { kOk = 0, kFailure = 1, kNotSolvable = 2, kKTooLarge = 3 };

std::string density(Cell edges, int k) {
  if (k == 0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", static_cast<double>(edges) / k);
  return buf;
}

void print_vector(const std::vector<Cell>& best, int k, bool all) {
  for (int c = all ? 0 : k; c <= k; ++c)
    std::cout << c << ' ' << best[c] << ' ' << density(best[c], c) << '\n';
}

void print_witness(const Graph& g, const std::vector<Vertex>& w) {
  std::cout << "witness:";
  for (Vertex v : w) std::cout << ' ' << g.name(v);
  std::cout << '\n';
}

std::uint64_t default_seed() {
  const char* s = std::getenv("DKS_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 1;
}

SolverKind parse_solver(const std::string& s) {
  if (s == "outerplanar") return SolverKind::Outerplanar;
  if (s == "bouterplanar") return SolverKind::Bouterplanar;
  return SolverKind::Auto;
}

MergeVariant parse_variant(const std::string& s) {
  if (s == "xy") return MergeVariant::ShiftOnXY;
  if (s == "xz") return MergeVariant::ShiftOnXZ;
  return MergeVariant::Exact;
}

std::optional<std::pair<Vertex, Vertex>> parse_root_edge(const Graph& g, const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(Error::Code::Parse, "--root-edge expects u,v");
  Vertex u = g.find(s.substr(0, comma)), v = g.find(s.substr(comma + 1));
  if (u < 0 || v < 0) throw Error(Error::Code::Parse, "unknown vertex in --root-edge");
  return std::pair{u, v};
}

struct SolveArgs {
  std::string graph;
  int k = 0;
  bool all_k = false, witness = false, trace = false, dump = false;
  std::string solver = "auto", variant = "exact", root_edge;
};

int dump_tables(const GraphInput& in, const SolveArgs& a) {
  const Graph& g = in.graph;
  int ncomp = 0;
  component_ids(g, &ncomp);
  bool outer = a.solver != "bouterplanar" && ncomp == 1 && g.vertex_count() > 1 &&
               is_outerplanar(g);
  if (outer) {
    if (a.k < 0 || a.k > g.vertex_count())
      throw Error(Error::Code::KTooLarge, "k exceeds the vertex count");
    OuterplanarDump d = dump_outerplanar(g, a.k, parse_root_edge(g, a.root_edge),
                                         parse_variant(a.variant));
    for (const DumpedTable& t : d.tables) {
      std::cout << "# node " << t.node;
      if (t.step == 0)
        std::cout << " leaf";
      else
        std::cout << " merge " << t.step;
      if (t.final) std::cout << " final";
      std::cout << '\n' << table_tsv(t.table, g);
    }
    return kOk;
  }
  SolveOptions so;
  so.k = a.k;
  so.solver = parse_solver(a.solver);
  so.variant = parse_variant(a.variant);
  so.dump = [](const std::string& s) { std::cout << s; };
  solve(in, so);
  return kOk;
}

int cmd_solve(const SolveArgs& a) {
  GraphInput in = read_graph_file(a.graph);
  if (a.dump) {
    dump_tables(in, a);
  }
  SolveOptions so;
  so.k = a.k;
  so.solver = parse_solver(a.solver);
  so.variant = parse_variant(a.variant);
  so.witness = a.witness;
  so.trace = a.trace;
  SolveReport rep = solve(in, so);
  print_vector(rep.best, a.k, a.all_k);
  if (a.witness) print_witness(in.graph, rep.witness);
  if (a.trace) {
    std::cerr << "solver " << rep.solver << " b " << rep.b << " components " << rep.components
              << " tree_nodes " << rep.tree_nodes << " table_calls " << rep.table_calls
              << " cells " << rep.cells << " seconds " << rep.seconds << " kernel "
              << kernels::active() << '\n';
    for (const auto& line : rep.trace) std::cerr << line << '\n';
  }
  return kOk;
}

int cmd_oracle(const std::string& path, int k, bool all_k, bool witness) {
  GraphInput in = read_graph_file(path);
  const Graph& g = in.graph;
  if (k < 0 || k > g.vertex_count())
    throw Error(Error::Code::KTooLarge, "k exceeds the vertex count");
  std::vector<Cell> best(k + 1, 0);
  std::vector<Vertex> w;
  for (int c = all_k ? 0 : k; c <= k; ++c)
    best[c] = brute_force_densest_k(g, c, c == k && witness ? &w : nullptr);
  print_vector(best, k, all_k);
  if (witness) print_witness(g, w);
  return kOk;
}

int cmd_gen(const std::string& family, GenSpec spec, const std::string& out) {
  Generated gen = family == "outerplanar"    ? gen_outerplanar(spec)
                  : family == "bouterplanar" ? gen_bouterplanar(spec)
                                             : gen_planar(spec);
  GraphInput gi;
  gi.graph = std::move(gen.graph);
  if (!gen.rotation.empty()) gi.rotation = gen.rotation;
  if (!gen.outer_face.empty()) gi.outer_face = gen.outer_face;
  if (out.empty() || out == "-")
    std::cout << to_json(gi) << '\n';
  else
    write_graph_file(out, gi);
  return kOk;
}

struct ProbeArgs {
  std::string graph, corpus, worst_out;
  int k = 3, star = 0, jobs = 1;
  double epsilon = 0.5;
  bool classic = false;
  Vertex root = 0;
};

int cmd_probe(const ProbeArgs& a) {
  ProbeOptions po;
  po.k = a.k;
  po.epsilon = a.epsilon;
  po.variant = a.classic ? ProbeVariant::Classic : ProbeVariant::Keep;
  po.root = a.root;
  std::cout << probe_csv_header() << '\n';
  if (a.corpus.empty()) {
    Graph g = a.star > 0 ? star_graph(a.star) : read_graph_file(a.graph).graph;
    ProbeRecord r = probe(g, po);
    r.instance = a.star > 0 ? "star" + std::to_string(a.star) : a.graph;
    std::cout << probe_csv_row(r) << '\n';
    return kOk;
  }
  auto files = corpus_files(a.corpus);
  std::vector<ProbeRecord> recs(files.size());
  std::vector<Graph> graphs(files.size());
  parallel_for(static_cast<int>(files.size()), a.jobs, [&](int i) {
    graphs[i] = read_graph_file(files[i]).graph;
    ProbeOptions o = po;
    o.k = std::min(po.k, graphs[i].vertex_count());
    recs[i] = probe(graphs[i], o);
    recs[i].instance = std::filesystem::path(files[i]).filename().string();
  });
  ProbeSummary s = summarize(recs);
  for (const auto& r : s.records) std::cout << probe_csv_row(r) << '\n';
  std::cout << "\nbin_low,bin_high,count\n";
  for (int b = 0; b < 10; ++b)
    std::cout << b / 10.0 << ',' << (b + 1) / 10.0 << ',' << s.histogram[b] << '\n';
  if (s.worst >= 0) {
    const ProbeRecord& w = s.records[s.worst];
    std::cout << "\nworst," << w.instance << ',' << w.ratio << '\n';
    if (!a.worst_out.empty()) {
      GraphInput gi;
      gi.graph = graphs[s.worst];
      write_graph_file(a.worst_out, gi);
    }
  }
  return kOk;
}

int cmd_bench(const std::string& corpus, int k, const std::string& solver, int jobs) {
  std::cout << bench_csv_header() << '\n';
  for (const BenchRow& r : bench_corpus(corpus, k, parse_solver(solver), jobs))
    std::cout << bench_csv_row(r) << '\n';
  return kOk;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case Error::Code::NotPlanar:
    case Error::Code::NotOuterplanar:
      return kNotSolvable;
    case Error::Code::KTooLarge:
      return kKTooLarge;
    default:
      return kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact densest k-subgraph for outerplanar and b-outerplanar graphs"};
  app.require_subcommand(1);
  std::string kernel = "auto";
  app.add_option("--kernel", kernel, "auto, scalar or avx2");

  SolveArgs sa;
  auto add_solve_flags = [&](CLI::App* c) {
    c->add_option("--graph", sa.graph, "graph file")->required();
    c->add_option("--k", sa.k, "subgraph size")->required();
    c->add_option("--force-solver", sa.solver, "auto, outerplanar or bouterplanar");
    c->add_option("--variant", sa.variant, "merge rule: exact, xy or xz");
    c->add_option("--root-edge", sa.root_edge, "u,v exterior edge for the tree root");
  };
  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  add_solve_flags(solve_cmd);
  solve_cmd->add_flag("--all-k", sa.all_k, "print every k' up to k");
  solve_cmd->add_flag("--witness", sa.witness, "print a maximizing vertex set");
  solve_cmd->add_flag("--trace", sa.trace, "report tree and table statistics on stderr");
  solve_cmd->add_flag("--dump-tables", sa.dump, "print every DP table first");
  auto* dump_cmd = app.add_subcommand("dump-tables", "print every DP table");
  add_solve_flags(dump_cmd);

  std::string o_graph;
  int o_k = 0;
  bool o_all = false, o_witness = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference");
  oracle_cmd->add_option("--graph", o_graph, "graph file")->required();
  oracle_cmd->add_option("--k", o_k, "subgraph size")->required();
  oracle_cmd->add_flag("--all-k", o_all, "print every k' up to k");
  oracle_cmd->add_flag("--witness", o_witness, "print the first maximizer");

  std::string family, g_out;
  GenSpec spec;
  spec.seed = default_seed();
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("family", family, "outerplanar, bouterplanar or planar")
      ->required()
      ->check(CLI::IsMember({"outerplanar", "bouterplanar", "planar"}));
  gen_cmd->add_option("--n", spec.n, "vertices")->required();
  gen_cmd->add_option("--b", spec.b, "levels");
  gen_cmd->add_option("--rho", spec.rho, "edge density in [0,1]");
  gen_cmd->add_option("--seed", spec.seed, "seed (default DKS_SEED or 1)");
  gen_cmd->add_option("--blocks", spec.blocks, "outerplanar blocks glued at cutpoints");
  gen_cmd->add_option("--out", g_out, "output file, stdout when absent");

  ProbeArgs pa;
  auto* probe_cmd = app.add_subcommand("probe-ptas", "Baker-style decomposition probe");
  probe_cmd->add_option("--graph", pa.graph, "graph file");
  probe_cmd->add_option("--corpus", pa.corpus, "directory of graph files");
  probe_cmd->add_option("--star", pa.star, "probe a star with this many leaves");
  probe_cmd->add_option("--k", pa.k, "subgraph size");
  probe_cmd->add_option("--epsilon", pa.epsilon, "b = ceil(1/epsilon)");
  probe_cmd->add_flag("--classic", pa.classic, "delete congruent levels instead of keeping");
  probe_cmd->add_option("--root", pa.root, "BFS root vertex id");
  probe_cmd->add_option("--jobs", pa.jobs, "worker threads");
  probe_cmd->add_option("--worst-out", pa.worst_out, "write the worst instance here");

  std::string b_corpus, b_solver = "auto";
  int b_k = 10, b_jobs = 1;
  auto* bench_cmd = app.add_subcommand("bench", "time a corpus");
  bench_cmd->add_option("--corpus", b_corpus, "directory of graph files")->required();
  bench_cmd->add_option("--k", b_k, "subgraph size");
  bench_cmd->add_option("--force-solver", b_solver, "auto, outerplanar or bouterplanar");
  bench_cmd->add_option("--jobs", b_jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);
  if (kernel != "auto" && !kernels::select(kernel)) {
    std::cerr << "kernel " << kernel << " unavailable\n";
    return kFailure;
  }
  try {
    if (*solve_cmd) return cmd_solve(sa);
    if (*dump_cmd) return dump_tables(read_graph_file(sa.graph), sa);
    if (*oracle_cmd) return cmd_oracle(o_graph, o_k, o_all, o_witness);
    if (*gen_cmd) return cmd_gen(family, spec, g_out);
    if (*probe_cmd) {
      if (pa.graph.empty() && pa.corpus.empty() && pa.star == 0) {
        std::cerr << "probe-ptas needs --graph, --corpus or --star\n";
        return kFailure;
      }
      return cmd_probe(pa);
    }
    if (*bench_cmd) return cmd_bench(b_corpus, b_k, b_solver, b_jobs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

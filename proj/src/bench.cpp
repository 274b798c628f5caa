#include "dks/bench.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

namespace dks {

BenchRow bench_one(const GraphInput& in, const std::string& name, int k, SolverKind solver) {
  SolveOptions so;
  so.k = std::min(k, in.graph.vertex_count());
  so.solver = solver;
  SolveReport rep = solve(in, so);
  BenchRow r;
  r.instance = name;
  r.n = in.graph.vertex_count();
  r.k = so.k;
  r.b = rep.b;
  r.solver = rep.solver;
  r.seconds = rep.seconds;
  r.cells = rep.cells;
  return r;
}

std::vector<std::string> corpus_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file()) out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BenchRow> bench_corpus(const std::string& dir, int k, SolverKind solver, int jobs) {
  auto files = corpus_files(dir);
  std::vector<BenchRow> rows(files.size());
  parallel_for(static_cast<int>(files.size()), jobs, [&](int i) {
    rows[i] = bench_one(read_graph_file(files[i]),
                        std::filesystem::path(files[i]).filename().string(), k, solver);
  });
  return rows;
}

std::string bench_csv_header() { return "instance,n,k,b,solver,seconds,cells"; }

std::string bench_csv_row(const BenchRow& r) {
  std::ostringstream os;
  os << r.instance << ',' << r.n << ',' << r.k << ',' << r.b << ',' << r.solver << ','
     << r.seconds << ',' << r.cells;
  return os.str();
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::size_t n = std::min(x.size(), y.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

}  // namespace dks

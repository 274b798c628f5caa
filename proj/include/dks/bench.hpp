#pragma once

#include <string>
#include <vector>

#include "dks/io.hpp"
#include "dks/solve.hpp"

namespace dks {

struct BenchRow {
  std::string instance;
  int n = 0, k = 0, b = 0;
  std::string solver;
  double seconds = 0;
  long long cells = 0;
};

BenchRow bench_one(const GraphInput& in, const std::string& name, int k, SolverKind solver);

// Graph files of a directory in name order.
std::vector<std::string> corpus_files(const std::string& dir);

// Runs every file of the directory with up to jobs worker threads; rows
// keep file order.
std::vector<BenchRow> bench_corpus(const std::string& dir, int k, SolverKind solver, int jobs);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& r);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);
double median(std::vector<double> v);

// Runs f(i) for i in [0, count) on up to jobs threads.
template <class F>
void parallel_for(int count, int jobs, F&& f);

}  // namespace dks

#include <atomic>
#include <thread>

namespace dks {

template <class F>
void parallel_for(int count, int jobs, F&& f) {
  jobs = std::max(1, std::min(jobs, count));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < count; i = next++) f(i);
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

}  // namespace dks

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dks/dp_bouterplanar.hpp"
#include "dks/dp_outerplanar.hpp"
#include "dks/embedding.hpp"
#include "dks/io.hpp"

namespace dks {

enum class SolverKind { Auto, Outerplanar, Bouterplanar };

struct SolveOptions {
  int k = 0;
  SolverKind solver = SolverKind::Auto;
  bool witness = false;
  FanAnchor anchor = FanAnchor::LowestId;
  MergeVariant variant = MergeVariant::Exact;
  bool trace = false;
  // Receives every DP table rendered as text, with a header line.
  std::function<void(const std::string&)> dump;
};

struct SolveReport {
  std::vector<Cell> best;        // k' = 0..k
  std::vector<Vertex> witness;   // empty unless requested
  std::string solver;            // "outerplanar" or "bouterplanar"
  int b = 1;                     // largest level over components
  int components = 0;
  long long tree_nodes = 0;
  long long table_calls = 0;
  long long cells = 0;
  double seconds = 0;
  std::vector<std::string> trace;  // one line per tree node when requested
};

// Max-plus combination of per-component column vectors up to total size k.
// choice, when given, receives per component the size used at each total.
std::vector<Cell> combine_components(const std::vector<std::vector<Cell>>& parts, int k,
                                     std::vector<std::vector<int>>* choice = nullptr);

SolveReport solve_outerplanar(const Graph& g, const SolveOptions& opt);
// rotation and outer face, when given, refer to g's vertex ids.
SolveReport solve_bouterplanar(const GraphInput& in, const SolveOptions& opt);
// Auto-detection: outerplanar recognizer first, then planar leveling.
SolveReport solve(const GraphInput& in, const SolveOptions& opt);

}  // namespace dks

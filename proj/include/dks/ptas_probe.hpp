#pragma once

#include <string>
#include <vector>

#include "dks/graph.hpp"
#include "dks/kernels.hpp"

namespace dks {

enum class ProbeVariant {
  Keep,     // G_i induced by levels congruent to i mod b
  Classic,  // G_i induced by levels not congruent to i mod b
};

// BFS depth per vertex from root; vertices of other components get depths
// from their smallest vertex.
std::vector<int> bfs_depths(const Graph& g, Vertex root);

struct ClassPiece {
  Graph graph;
  std::vector<Vertex> map;  // piece id -> input id
  int levels = 0;           // level count of the embedding used to solve it
  bool certified = false;   // levels <= max(1, b - 1)
};

struct ClassDecomposition {
  int i = 0;
  int kept = 0;  // vertices of G_i
  std::vector<ClassPiece> pieces;
};

std::vector<ClassDecomposition> baker_decompose(const Graph& g, int b, ProbeVariant variant,
                                                Vertex root = 0);

struct ProbeOptions {
  int k = 0;
  double epsilon = 0.5;
  ProbeVariant variant = ProbeVariant::Keep;
  Vertex root = 0;
};

struct ProbeRecord {
  std::string instance;
  int n = 0, m = 0, k = 0, b = 0;
  double epsilon = 0;
  std::string variant;
  Cell best = 0;        // S
  Cell opt = 0;         // exact optimum
  double ratio = 1;     // S / OPT, 1 when OPT = 0
  int best_i = 0;
  int worst_i = 0;      // class with the smallest S_i
  std::vector<Cell> per_class;  // S_i
  int uncertified = 0;  // pieces whose level count exceeds b - 1
  std::string reference;  // "oracle" or "solver"
};

// b = ceil(1 / epsilon), at least 2.
int probe_b(double epsilon);

// S_i pads with outside vertices when G_i has fewer than k vertices, so S_i
// is the best column at or below k.
ProbeRecord probe(const Graph& g, const ProbeOptions& opt);

// Star on leaves + 1 vertices, center 0: every edge joins BFS levels 0 and 1.
Graph star_graph(int leaves);

std::string probe_csv_header();
std::string probe_csv_row(const ProbeRecord& r);

struct ProbeSummary {
  std::vector<ProbeRecord> records;
  std::vector<int> histogram;  // ten bins over [0, 1], 1.0 in the last
  int worst = -1;              // record index with the smallest ratio
};

ProbeSummary summarize(std::vector<ProbeRecord> records);

}  // namespace dks

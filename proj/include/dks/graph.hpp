#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace dks {

using Vertex = std::int32_t;

enum class EdgeKind : std::uint8_t { Real, FakeTriangulation, BridgeDouble };

struct Edge {
  Vertex u;
  Vertex v;
  EdgeKind kind;
};

class Error : public std::runtime_error {
 public:
  enum class Code {
    Parse,
    NotOuterplanar,
    NotPlanar,
    EmbeddingInconsistent,
    TriangulationIncomplete,
    NoDividingPoint,
    BoundaryMismatch,
    KTooLarge,
    CapExceeded,
    InfeasibleSpec,
  };
  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

inline std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Undirected simple graph over REAL edges with optional names.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  Vertex add_vertex(const std::string& name = {});
  // Returns the edge id; throws on self loops and duplicates.
  int add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return keys_.count(pair_key(u, v)) != 0; }

  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  const std::string& name(Vertex v) const { return names_[v]; }
  // -1 when unknown.
  Vertex find(const std::string& name) const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::unordered_set<std::uint64_t> keys_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
};

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : bits_((n + 63) / 64, 0), n_(n) {}

  int universe() const { return n_; }
  bool contains(Vertex v) const { return (bits_[v >> 6] >> (v & 63)) & 1u; }
  void insert(Vertex v) { bits_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  int size() const;
  std::vector<Vertex> members() const;
  bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  std::vector<std::uint64_t> bits_;
  int n_ = 0;
};

int induced_edge_count(const Graph& g, const VertexSet& s);

// Component id per vertex over REAL edges; ids in order of lowest vertex.
std::vector<int> component_ids(const Graph& g, int* count = nullptr);
std::vector<VertexSet> connected_components(const Graph& g);

struct BlockDecomposition {
  std::vector<int> bridges;          // edge ids
  std::vector<Vertex> cutpoints;     // sorted
  std::vector<std::vector<int>> blocks;  // edge ids per block
  std::vector<int> edge_block;       // block id per edge
};

BlockDecomposition bridges_and_cutpoints(const Graph& g);

// Subgraph on the listed vertices; map[i] is the original id of new vertex i.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& verts,
                       std::vector<Vertex>* map = nullptr);

}  // namespace dks

#pragma once

#include <string>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

// Half-edge h runs tail(h) -> head(h); h ^ 1 is its twin. Rotations are
// counterclockwise. The face to the left of h is traced by face_next, the
// face to the right by right_next.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  // rotation[v] lists the neighbours of v counterclockwise.
  PlaneGraph(const Graph& g, const std::vector<std::vector<Vertex>>& rotation);

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return static_cast<int>(ends_.size()) / 2; }
  int half_edge_count() const { return static_cast<int>(ends_.size()); }

  static int twin(int h) { return h ^ 1; }
  static int edge_of(int h) { return h >> 1; }
  Vertex tail(int h) const { return ends_[h ^ 1]; }
  Vertex head(int h) const { return ends_[h]; }
  EdgeKind kind(int h) const { return kinds_[h >> 1]; }
  // True for an edge whose kind is Real.
  bool real(int h) const { return kinds_[h >> 1] == EdgeKind::Real; }

  const std::vector<int>& rotation(Vertex v) const { return rot_[v]; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  int rot_next(int h) const;
  int rot_prev(int h) const;
  int face_next(int h) const { return rot_prev(h ^ 1); }
  int right_next(int h) const { return rot_next(h ^ 1); }
  // First half-edge u -> v, or -1.
  int find(Vertex u, Vertex v) const;

  // Adds edge u-v. The half-edge out of u is placed just counterclockwise
  // after after_u (or alone when u has no edges, after_u = -1); same at v.
  // Returns the half-edge u -> v.
  int insert_edge(Vertex u, int after_u, Vertex v, int after_v, EdgeKind kind);

  const Graph& graph() const { return *graph_; }

 private:
  const Graph* graph_ = nullptr;
  std::vector<Vertex> ends_;  // ends_[h] = head(h)
  std::vector<EdgeKind> kinds_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> pos_;  // index of h in rot_[tail(h)]
};

struct FaceSet {
  std::vector<int> face_of;              // left face per half-edge
  std::vector<std::vector<int>> cycles;  // half-edges per face in face_next order
  int count() const { return static_cast<int>(cycles.size()); }
};

FaceSet trace_faces(const PlaneGraph& pg);

// Restricted view: only half-edges with keep[edge] set. Rotations keep the
// cyclic order of the parent.
struct SubRotation {
  std::vector<int> next;  // ccw next within the view, -1 when not kept
  std::vector<int> prev;
  int face_next(int h) const { return prev[h ^ 1]; }
  int right_next(int h) const { return next[h ^ 1]; }
};

SubRotation restrict_rotation(const PlaneGraph& pg, const std::vector<char>& keep_edge);
FaceSet trace_faces(const SubRotation& sr, int half_edges);

// V - E + F = 2 per connected component with edges.
bool euler_consistent(const PlaneGraph& pg);

// Face index whose vertex cycle equals the given cyclic sequence in either
// direction, or -1.
int match_face(const PlaneGraph& pg, const FaceSet& fs, const std::vector<Vertex>& cycle);
// Longest face, ties by smallest minimum vertex id then face index.
int longest_face(const PlaneGraph& pg, const FaceSet& fs);

std::vector<Vertex> face_vertices(const PlaneGraph& pg, const std::vector<int>& cycle);

}  // namespace dks

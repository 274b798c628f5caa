#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dks/graph.hpp"
#include "dks/plane.hpp"

namespace dks {

struct OuterplanarEmbedding {
  std::vector<std::vector<Vertex>> rotation;  // ccw
  // One directed edge u -> v per component with edges whose left face is
  // the outer face.
  std::vector<std::pair<Vertex, Vertex>> outer_edges;
};

// Throws Error(NotOuterplanar).
OuterplanarEmbedding recognize_outerplanar(const Graph& g);
bool is_outerplanar(const Graph& g);

// Boundary walk of the outer face of one component (vertex sequence, cut
// vertices and bridge ends repeat).
std::vector<Vertex> outer_walk(const PlaneGraph& pg, int outer_half_edge);

// Combinatorial embedding of a planar graph; throws Error(NotPlanar).
std::vector<std::vector<Vertex>> planar_rotation(const Graph& g);

struct LeveledEmbedding {
  PlaneGraph plane;  // REAL edges plus connector and triangulation edges
  int outer_half_edge = -1;  // left face is the outer face
  std::vector<int> level;    // 1-based, per vertex
  int b = 0;
  int connectors = 0;
  int triangulation_edges = 0;
};

// Levels by breadth-first search over vertex-face incidences from the outer
// face. g must be connected. outer_half_edge has the outer face on its left.
std::vector<int> compute_levels(const PlaneGraph& pg, int outer_half_edge);

// Literal peeling: repeatedly delete the current outer-face vertices.
std::vector<int> peel_levels(const PlaneGraph& pg, int outer_half_edge);

enum class FanAnchor { LowestId, HighestId };

// Levels, connector fake edges and the inter-level triangulation.
LeveledEmbedding build_leveled(const Graph& g, const std::vector<std::vector<Vertex>>& rotation,
                               std::optional<std::vector<Vertex>> outer_face,
                               FanAnchor anchor = FanAnchor::LowestId);

// Picks an outer face: the requested cycle if given, else the longest face.
int choose_outer_half_edge(const PlaneGraph& pg, const std::optional<std::vector<Vertex>>& outer);

// Checks that every face touching two levels is a triangle.
bool inter_level_faces_triangular(const LeveledEmbedding& le);

std::string to_dot(const LeveledEmbedding& le);

}  // namespace dks

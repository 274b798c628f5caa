#pragma once

#include <string>
#include <vector>

#include "dks/embedding.hpp"
#include "dks/plane.hpp"

namespace dks {

enum class NodeKind {
  Face,    // interior face of a block, or the 2-gon of a doubled bridge
  Leaf,    // exterior edge
  Group,   // several blocks hanging at one vertex (c,c)
  Single,  // component with one vertex (w,w)
};

struct TreeNode {
  Vertex x = -1, y = -1;
  NodeKind kind = NodeKind::Face;
  int level = 1;
  int component = -1;
  int parent = -1;
  std::vector<int> children;
  int half_edge = -1;  // Leaf: x -> y on the outer side; Face: first chain half-edge
  int chord = -1;      // Face entered through a chord: the chord x -> y (face on its left)
  bool bridge = false;   // Face: 2-gon of a doubled bridge
  bool counted = false;  // Leaf: edge contributes to counts
  int encloses = -1;     // Face: enclosed component
  int lbn = 0, rbn = 0, pivot = 0;
  std::vector<Vertex> left, right;  // innermost first
};

struct ComponentInfo {
  int level = 1;
  int root = -1;
  int enclosing = -1;  // node index of vertex(f), -1 at level 1
  std::vector<int> leaves;
  std::vector<Vertex> vertices;
};

struct BakerForest {
  std::vector<TreeNode> nodes;
  std::vector<ComponentInfo> components;
  int root = -1;  // root of the level-1 tree
  int b = 1;

  // Labels of the children of node v, as the vertex sequence z_1..z_{t+1}.
  std::vector<Vertex> child_sequence(int v) const;
  // Post-order of the subtree at v (children before parents).
  std::vector<int> postorder(int v) const;
};

// Tree of one connected plane graph whose vertices all lie on the outer
// face. start is a half-edge with the root face on its right; the root's
// children begin with start. With start = -1 the default root is used: the
// face on the inner side of the lexicographically smallest exterior edge.
BakerForest build_outerplanar_tree(const PlaneGraph& pg, int outer_half_edge, int start = -1);

// Default root start half-edge for a component.
int default_root_start(const PlaneGraph& pg, int outer_half_edge);

// Forest for a leveled, triangulated embedding: one tree per level
// component, boundary numbers, pivots and boundaries.
BakerForest build_leveled_forest(const LeveledEmbedding& le, int start = -1);

// Dividing point test on the augmented rotation: edges (x2,x1), (x2,y),
// (x2,x3) in counterclockwise order around x2.
bool is_dividing_point(const PlaneGraph& pg, Vertex x1, Vertex x2, Vertex x3, Vertex y);

std::string to_dot(const BakerForest& forest, const Graph& g);

}  // namespace dks

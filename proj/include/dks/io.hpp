#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

// Rotation lists are counterclockwise neighbour orders.
struct GraphInput {
  Graph graph;
  std::optional<std::vector<std::vector<Vertex>>> rotation;
  std::optional<std::vector<Vertex>> outer_face;
};

GraphInput parse_edge_list(std::istream& in);
GraphInput parse_json(const std::string& text);
// Dispatches on the first non-blank character ('{' means JSON).
GraphInput read_graph_file(const std::string& path);

std::string to_json(const GraphInput& gi);
void write_graph_file(const std::string& path, const GraphInput& gi);

}  // namespace dks

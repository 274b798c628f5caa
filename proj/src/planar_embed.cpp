#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "dks/embedding.hpp"

namespace dks {

std::vector<std::vector<Vertex>> planar_rotation(const Graph& g) {
  using namespace boost;
  using BG = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>,
                            property<edge_index_t, int>>;
  int n = g.vertex_count();
  BG bg(n);
  for (auto [u, v] : g.edges()) add_edge(u, v, bg);
  auto eidx = get(edge_index, bg);
  int c = 0;
  graph_traits<BG>::edge_iterator ei, ee;
  for (tie(ei, ee) = edges(bg); ei != ee; ++ei) put(eidx, *ei, c++);

  using EdgeDesc = graph_traits<BG>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> storage(n);
  auto embedding = make_iterator_property_map(storage.begin(), get(vertex_index, bg));
  if (!boyer_myrvold_planarity_test(boyer_myrvold_params::graph = bg,
                                    boyer_myrvold_params::embedding = embedding))
    throw Error(Error::Code::NotPlanar, "graph is not planar");
  std::vector<std::vector<Vertex>> rot(n);
  for (int v = 0; v < n; ++v)
    for (const auto& e : storage[v]) {
      int a = static_cast<int>(source(e, bg)), b = static_cast<int>(target(e, bg));
      rot[v].push_back(a == v ? b : a);
    }
  return rot;
}

}  // namespace dks

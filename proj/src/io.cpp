#include "dks/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dks {

namespace {

Vertex intern(Graph& g, const std::string& name) {
  Vertex v = g.find(name);
  return v >= 0 ? v : g.add_vertex(name);
}

}  // namespace

GraphInput parse_edge_list(std::istream& in) {
  GraphInput gi;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b) || (ls >> extra))
      throw Error(Error::Code::Parse, "line " + std::to_string(lineno) + ": expected 'u v'");
    Vertex u = intern(gi.graph, a);
    Vertex v = intern(gi.graph, b);
    gi.graph.add_edge(u, v);
  }
  return gi;
}

GraphInput parse_json(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Error::Code::Parse, e.what());
  }
  GraphInput gi;
  auto name_of = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  auto lookup = [&](const json& x) {
    Vertex v = gi.graph.find(name_of(x));
    if (v < 0) throw Error(Error::Code::Parse, "unknown vertex " + name_of(x));
    return v;
  };
  try {
    if (j.contains("vertices"))
      for (const auto& x : j.at("vertices")) {
        if (gi.graph.find(name_of(x)) >= 0)
          throw Error(Error::Code::Parse, "duplicate vertex " + name_of(x));
        gi.graph.add_vertex(name_of(x));
      }
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(Error::Code::Parse, "edge must be a pair");
      gi.graph.add_edge(intern(gi.graph, name_of(e[0])), intern(gi.graph, name_of(e[1])));
    }
    if (j.contains("rotation")) {
      std::vector<std::vector<Vertex>> rot(gi.graph.vertex_count());
      const auto& r = j.at("rotation");
      if (r.is_object()) {
        for (auto it = r.begin(); it != r.end(); ++it) {
          Vertex v = gi.graph.find(it.key());
          if (v < 0) throw Error(Error::Code::Parse, "unknown vertex " + it.key());
          for (const auto& w : it.value()) rot[v].push_back(lookup(w));
        }
      } else {
        if (r.size() != rot.size()) throw Error(Error::Code::Parse, "rotation size mismatch");
        for (std::size_t v = 0; v < rot.size(); ++v)
          for (const auto& w : r[v]) rot[v].push_back(lookup(w));
      }
      gi.rotation = std::move(rot);
    }
    if (j.contains("outer_face")) {
      std::vector<Vertex> of;
      for (const auto& x : j.at("outer_face")) of.push_back(lookup(x));
      gi.outer_face = std::move(of);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Error::Code::Parse, e.what());
  }
  return gi;
}

GraphInput read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Code::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return parse_json(text);
  std::istringstream is(text);
  return parse_edge_list(is);
}

std::string to_json(const GraphInput& gi) {
  using nlohmann::json;
  const Graph& g = gi.graph;
  json j;
  j["vertices"] = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.name(v));
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({g.name(u), g.name(v)});
  if (gi.rotation) {
    json r = json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      json lst = json::array();
      for (Vertex w : (*gi.rotation)[v]) lst.push_back(g.name(w));
      r[g.name(v)] = lst;
    }
    j["rotation"] = r;
  }
  if (gi.outer_face) {
    json of = json::array();
    for (Vertex v : *gi.outer_face) of.push_back(g.name(v));
    j["outer_face"] = of;
  }
  return j.dump(1);
}

void write_graph_file(const std::string& path, const GraphInput& gi) {
  std::ofstream out(path);
  if (!out) throw Error(Error::Code::Parse, "cannot write " + path);
  out << to_json(gi) << "\n";
}

}  // namespace dks

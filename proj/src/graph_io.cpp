#include "uct/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "uct/error.hpp"

namespace uct {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edges") return GraphFormat::Edges;
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json") return GraphFormat::Json;
  if (name == "text") return GraphFormat::Text;
  throw Error(ErrorKind::ParseError, "unknown graph format '" + std::string(name) + "'");
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# vertices: " << g.vertex_count() << '\n';
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

namespace {

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

void write_dot(const Graph& g, std::ostream& out, std::string_view name) {
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (!g.labels().empty()) out << " [label=\"" << dot_escape(g.labels()[v]) << "\"]";
    out << ";\n";
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) out << "  " << u << " -- " << v << ";\n";
    }
  }
  out << "}\n";
}

void write_json(const Graph& g, std::ostream& out) {
  nlohmann::json edges = nlohmann::json::array();
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) edges.push_back({u, v});
    }
  }
  nlohmann::json doc = {
      {"vertex_count", g.vertex_count()},
      {"labels", g.labels()},
      {"edges", std::move(edges)},
  };
  out << doc.dump() << '\n';
}

void write_adjacency_text(const Graph& g, std::ostream& out) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << v;
    if (!g.labels().empty()) out << " " << g.labels()[v];
    out << ':';
    for (Vertex u : g.neighbors(v)) out << ' ' << u;
    out << '\n';
  }
}

void write_graph(const Graph& g, GraphFormat format, std::ostream& out) {
  switch (format) {
    case GraphFormat::Edges: write_edge_list(g, out); break;
    case GraphFormat::Dot: write_dot(g, out); break;
    case GraphFormat::Json: write_json(g, out); break;
    case GraphFormat::Text: write_adjacency_text(g, out); break;
  }
}

Graph read_edge_list(std::istream& in) {
  std::optional<std::size_t> declared;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t max_vertex_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      std::istringstream header(line.substr(start + 1));
      std::string key;
      std::size_t count = 0;
      if (header >> key && key == "vertices:" && header >> count) declared = count;
      continue;
    }
    std::istringstream fields(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest) || u < 0 || v < 0) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (u == v) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_vertex_plus_one = std::max<std::size_t>(max_vertex_plus_one, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  const std::size_t n = declared.value_or(max_vertex_plus_one);
  if (max_vertex_plus_one > n) throw Error(ErrorKind::ParseError, "edge endpoint beyond declared vertex count");
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph read_json_graph(std::istream& in) {
  try {
    const auto doc = nlohmann::json::parse(in);
    const auto n = doc.at("vertex_count").get<std::size_t>();
    GraphBuilder b(n);
    for (const auto& e : doc.at("edges")) {
      const auto u = e.at(0).get<Vertex>();
      const auto v = e.at(1).get<Vertex>();
      if (u >= n || v >= n || u == v) throw Error(ErrorKind::ParseError, "bad edge in JSON graph");
      b.add_edge(u, v);
    }
    if (doc.contains("labels")) b.set_labels(doc.at("labels").get<std::vector<std::string>>());
    return std::move(b).build();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace uct

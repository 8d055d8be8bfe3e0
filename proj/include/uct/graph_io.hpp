#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "uct/graph.hpp"

namespace uct {

enum class GraphFormat { Edges, Dot, Json, Text };

/// Parses "edges", "dot", "json" or "text". Throws ParseError.
GraphFormat parse_graph_format(std::string_view name);

/// Edge list: a "# vertices: N" comment line, then one "u v" line per edge with u < v,
/// ascending by (u, v).
void write_edge_list(const Graph& g, std::ostream& out);
/// Undirected DOT; vertex labels become node label attributes.
void write_dot(const Graph& g, std::ostream& out, std::string_view name = "G");
/// {"vertex_count": N, "labels": [...], "edges": [[u, v], ...]}
void write_json(const Graph& g, std::ostream& out);
/// One "v: n1 n2 ..." line per vertex.
void write_adjacency_text(const Graph& g, std::ostream& out);
void write_graph(const Graph& g, GraphFormat format, std::ostream& out);

/// Reads the edge-list format. Lines starting with '#' are comments except the vertex
/// header; without a header the vertex count is one past the largest endpoint.
/// Throws ParseError on malformed lines, loops or endpoints beyond the header count.
Graph read_edge_list(std::istream& in);
/// Reads the JSON envelope produced by write_json. Throws ParseError.
Graph read_json_graph(std::istream& in);

}  // namespace uct

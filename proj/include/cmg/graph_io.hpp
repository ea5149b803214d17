#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cmg/graph.hpp"

namespace cmg {

/// Parsed graph file.
///
/// Line-oriented format, `#` starts a comment:
///
///     vertex <name>          declare a vertex
///     edge <a> <b>           declare an edge (endpoints are declared implicitly)
///     pairs <n>              vertices x1..xn, y1..yn and edges x1y1..xnyn
///     pair <x> <y>           one matched pair x-y, in labeling order
///     part X|Y <name>...     side assignment for bipartite blocks
///
/// `pairs` and `pair` also record a labeling in declaration order.
struct GraphFile {
  Graph graph;
  std::vector<NamedEdge> pairs;
  std::vector<std::string> x_side;
  std::vector<std::string> y_side;
};

/// Throws InputError with a line number on malformed input.
GraphFile parse_graph_text(std::string_view text);
GraphFile read_graph_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Canonical text form: `vertex` lines in name order, then `edge` lines
/// sorted by endpoint order. parse_graph_text(format_graph(g)).graph == g.
std::string format_graph(const Graph& g);

/// Hex FNV-1a 64-bit digest, prefixed "fnv1a64:".
std::string content_digest(std::string_view bytes);

}  // namespace cmg

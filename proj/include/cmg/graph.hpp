#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmg/vertex_set.hpp"

namespace cmg {

/// Orders names by alternating runs of digits and non-digits, comparing digit
/// runs numerically, so x2 < x10 < y1.
bool natural_less(std::string_view a, std::string_view b);

struct NaturalLess {
  bool operator()(std::string_view a, std::string_view b) const { return natural_less(a, b); }
};

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using NamedEdge = std::pair<std::string, std::string>;

/// Finite simple undirected graph on named vertices.
///
/// Vertex ids are positions in the natural order of the names, so every
/// enumeration that walks ids in increasing order is already sorted by name.
/// At most 64 vertices; exact enumeration is hopeless well before that.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = VertexSet::kCapacity;

  Graph() = default;

  /// Throws InputError on duplicate names, loops, edges to undeclared
  /// vertices, or more than kMaxVertices vertices. Repeated edges collapse.
  Graph(std::vector<std::string> names, std::span<const NamedEdge> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const;
  const std::string& name(Vertex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Vertex> find(std::string_view name) const;
  /// Throws InputError when the vertex is unknown.
  Vertex id(std::string_view name) const;
  VertexSet set_of(std::span<const std::string> names) const;
  std::vector<std::string> names_of(VertexSet s) const;

  VertexSet all() const { return VertexSet::first(names_.size()); }
  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex a, Vertex b) const { return adjacency_[a].contains(b); }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  VertexSet isolated() const;

  /// Sorted by (u, v).
  std::vector<Edge> edges() const;
  std::vector<NamedEdge> named_edges() const;

  bool is_independent(VertexSet s) const;
  bool is_vertex_cover(VertexSet s) const;

  /// G + F on the same vertex set; existing edges are kept once.
  Graph with_edges_added(std::span<const Edge> added) const;
  /// G - F on the same vertex set; absent edges are ignored.
  Graph with_edges_removed(std::span<const Edge> removed) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> adjacency_;
};

/// G|_W. Vertex ids are renumbered; names are preserved.
Graph induced_subgraph(const Graph& g, VertexSet w);
/// Name-based form; throws InputError for names that are not vertices of g.
Graph induced_subgraph(const Graph& g, std::span<const std::string> w);
/// G - W
Graph remove_vertices(const Graph& g, VertexSet w);
Graph remove_edges(const Graph& g, std::span<const Edge> f);
Graph add_edges(const Graph& g, std::span<const Edge> f);

}  // namespace cmg

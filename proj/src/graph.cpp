#include "cmg/graph.hpp"

#include <algorithm>
#include <cctype>

#include "cmg/errors.hpp"

namespace cmg {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < a.size() && is_digit(a[ei])) ++ei;
      while (ej < b.size() && is_digit(b[ej])) ++ej;
      std::string_view ra = a.substr(i, ei - i);
      std::string_view rb = b.substr(j, ej - j);
      const auto nz_a = std::min(ra.find_first_not_of('0'), ra.size());
      const auto nz_b = std::min(rb.find_first_not_of('0'), rb.size());
      std::string_view va = ra.substr(nz_a);
      std::string_view vb = rb.substr(nz_b);
      if (va.size() != vb.size()) return va.size() < vb.size();
      if (va != vb) return va < vb;
      // Equal values: fewer leading zeros first keeps the order strict.
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return (a.size() - i) < (b.size() - j);
}

Graph::Graph(std::vector<std::string> names, std::span<const NamedEdge> edges) {
  std::sort(names.begin(), names.end(), NaturalLess{});
  for (std::size_t k = 1; k < names.size(); ++k) {
    if (names[k - 1] == names[k]) throw InputError("duplicate vertex '" + names[k] + "'");
  }
  if (names.size() > kMaxVertices) {
    throw InputError("graph has " + std::to_string(names.size()) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  names_ = std::move(names);
  adjacency_.assign(names_.size(), VertexSet{});
  for (const auto& [a, b] : edges) {
    if (a == b) throw InputError("loop at vertex '" + a + "'");
    const Vertex u = id(a);
    const Vertex v = id(b);
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet s : adjacency_) twice += s.size();
  return twice / 2;
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const std::string& lhs, std::string_view rhs) { return natural_less(lhs, rhs); });
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

Vertex Graph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

VertexSet Graph::set_of(std::span<const std::string> names) const {
  VertexSet s;
  for (const auto& n : names) s.insert(id(n));
  return s;
}

std::vector<std::string> Graph::names_of(VertexSet s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(names_[v]);
  return out;
}

VertexSet Graph::isolated() const {
  VertexSet s;
  for (Vertex v = 0; v < names_.size(); ++v) {
    if (adjacency_[v].empty()) s.insert(v);
  }
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < names_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<NamedEdge> Graph::named_edges() const {
  std::vector<NamedEdge> out;
  for (const Edge& e : edges()) out.emplace_back(names_[e.u], names_[e.v]);
  return out;
}

bool Graph::is_independent(VertexSet s) const {
  for (Vertex v : s) {
    if (adjacency_[v].intersects(s)) return false;
  }
  return true;
}

bool Graph::is_vertex_cover(VertexSet s) const {
  // Every vertex outside s must have all its neighbours inside s.
  return is_independent(all() - s);
}

Graph Graph::with_edges_added(std::span<const Edge> added) const {
  Graph out = *this;
  for (const Edge& e : added) {
    if (e.u == e.v) throw InputError("loop at vertex '" + names_.at(e.u) + "'");
    if (e.v >= names_.size()) throw InputError("edge endpoint out of range");
    out.adjacency_[e.u].insert(e.v);
    out.adjacency_[e.v].insert(e.u);
  }
  return out;
}

Graph Graph::with_edges_removed(std::span<const Edge> removed) const {
  Graph out = *this;
  for (const Edge& e : removed) {
    if (e.v >= names_.size()) throw InputError("edge endpoint out of range");
    out.adjacency_[e.u].erase(e.v);
    out.adjacency_[e.v].erase(e.u);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
  if (!w.subset_of(g.all())) throw InputError("vertex set is not contained in the graph");
  std::vector<NamedEdge> kept;
  for (const Edge& e : g.edges()) {
    if (w.contains(e.u) && w.contains(e.v)) kept.emplace_back(g.name(e.u), g.name(e.v));
  }
  return Graph(g.names_of(w), kept);
}

Graph induced_subgraph(const Graph& g, std::span<const std::string> w) {
  return induced_subgraph(g, g.set_of(w));
}

Graph remove_vertices(const Graph& g, VertexSet w) { return induced_subgraph(g, g.all() - w); }

Graph remove_edges(const Graph& g, std::span<const Edge> f) { return g.with_edges_removed(f); }

Graph add_edges(const Graph& g, std::span<const Edge> f) { return g.with_edges_added(f); }

}  // namespace cmg

#include "cmg/transform.hpp"

#include <functional>
#include <algorithm>
#include <charconv>
#include <set>

#include "cmg/errors.hpp"

namespace cmg {

namespace {

Graph apply_o(const PairedLabeling& pl, const Graph& g, std::size_t i) {
  std::vector<Edge> removed;
  std::vector<Edge> added;
  const Vertex yi = pl.y(i);
  const Vertex xi = pl.x(i);
  for (std::size_t k = 0; k < pl.n(); ++k) {
    if (k == i || !g.adjacent(pl.x(k), yi)) continue;
    removed.emplace_back(pl.x(k), yi);
    added.emplace_back(pl.x(k), xi);
  }
  return g.with_edges_removed(removed).with_edges_added(added);
}

void check_index(const PairedLabeling& pl, std::size_t i) {
  if (i >= pl.n()) {
    throw InputError("pair index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(pl.n()));
  }
}

}  // namespace

Graph o_operator(const PairedLabeling& pl, std::size_t i) {
  check_index(pl, i);
  return apply_o(pl, pl.graph(), i);
}

Graph o_set(const PairedLabeling& pl, std::span<const std::size_t> t) {
  for (std::size_t i : t) check_index(pl, i);
  Graph g = pl.graph();
  for (auto it = t.rbegin(); it != t.rend(); ++it) g = apply_o(pl, g, *it);
  return g;
}

Graph restricted_o_full(const PairedLabeling& pl) {
  std::vector<std::size_t> everything(pl.n());
  for (std::size_t i = 0; i < pl.n(); ++i) everything[i] = i;
  const Graph full = o_set(pl, everything);
  return induced_subgraph(full, pl.xs());
}

GraftResult b_graft(const BGraftSpec& spec) {
  const std::size_t p = spec.h0.vertex_count();
  if (spec.blocks.size() != p) {
    throw SpecError("H_0 has " + std::to_string(p) + " vertices but " + std::to_string(spec.blocks.size()) +
                    " blocks were given");
  }
  // H_0 vertex names must be exactly 1..p.
  std::vector<std::size_t> block_of(p);
  for (Vertex v = 0; v < p; ++v) {
    const std::string& name = spec.h0.name(v);
    std::size_t label = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), label);
    if (ec != std::errc{} || ptr != name.data() + name.size() || label < 1 || label > p) {
      throw SpecError("H_0 vertices must be labeled 1.." + std::to_string(p) + "; found '" + name + "'");
    }
    block_of[v] = label - 1;
  }

  std::vector<std::string> names;
  std::vector<NamedEdge> edges;
  std::set<std::string> seen;
  for (std::size_t b = 0; b < p; ++b) {
    const BGraftBlock& block = spec.blocks[b];
    const std::string where = "block " + std::to_string(b + 1) + ": ";
    const Graph& bg = block.graph;
    if (block.x_side.size() != block.y_side.size() || block.x_side.empty()) {
      throw SpecError(where + "sides must be nonempty and of equal size");
    }
    const VertexSet xs = bg.set_of(block.x_side);
    const VertexSet ys = bg.set_of(block.y_side);
    if (xs.size() != block.x_side.size() || ys.size() != block.y_side.size() || xs.intersects(ys) ||
        (xs | ys) != bg.all()) {
      throw SpecError(where + "sides must partition the block's vertices");
    }
    if (!bg.is_independent(xs) || !bg.is_independent(ys)) throw SpecError(where + "edge inside one side");
    if (!bg.isolated().empty()) throw SpecError(where + "isolated vertex '" + bg.name(bg.isolated().lowest()) + "'");
    for (const auto& name : bg.names()) {
      if (!seen.insert(name).second) throw SpecError(where + "vertex '" + name + "' appears in another block");
      names.push_back(name);
    }
    for (const auto& e : bg.named_edges()) edges.push_back(e);
  }
  for (const Edge& e : spec.h0.edges()) {
    const BGraftBlock& a = spec.blocks[block_of[e.u]];
    const BGraftBlock& c = spec.blocks[block_of[e.v]];
    for (const auto& xa : a.x_side) {
      for (const auto& xc : c.x_side) edges.emplace_back(xa, xc);
    }
  }
  Graph g(std::move(names), edges);

  std::vector<NamedEdge> pairs;
  for (std::size_t b = 0; b < p; ++b) {
    const BGraftBlock& block = spec.blocks[b];
    const Graph& bg = block.graph;
    std::vector<std::string> xs_sorted = block.x_side;
    std::sort(xs_sorted.begin(), xs_sorted.end(), NaturalLess{});
    // Lex-first perfect matching of this block, found by trying each x's
    // candidates in name order and backtracking.
    std::vector<NamedEdge> chosen;
    std::set<std::string> used;
    std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
      if (k == xs_sorted.size()) return true;
      const Vertex x = bg.id(xs_sorted[k]);
      for (Vertex y : bg.neighbors(x)) {
        if (used.count(bg.name(y))) continue;
        used.insert(bg.name(y));
        chosen.emplace_back(xs_sorted[k], bg.name(y));
        if (place(k + 1)) return true;
        chosen.pop_back();
        used.erase(bg.name(y));
      }
      return false;
    };
    if (!place(0)) throw StructureError("block " + std::to_string(b + 1) + " has no perfect matching");
    pairs.insert(pairs.end(), chosen.begin(), chosen.end());
  }

  PairedLabeling labeling = PairedLabeling::from_names(g, pairs);
  return GraftResult{std::move(g), std::move(labeling)};
}

}  // namespace cmg

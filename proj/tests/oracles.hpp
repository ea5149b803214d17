// Brute-force reference implementations. Each one walks every subset or
// permutation and uses only Graph::adjacent, so it shares no algorithm with
// the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cmg/graph.hpp"
#include "cmg/pairing.hpp"

namespace oracle {

using cmg::Graph;
using cmg::Vertex;

inline bool covers(const Graph& g, std::uint64_t s) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v) && !((s >> u) & 1U) && !((s >> v) & 1U)) return false;
    }
  }
  return true;
}

inline bool independent(const Graph& g, std::uint64_t s) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v) && ((s >> u) & 1U) && ((s >> v) & 1U)) return false;
    }
  }
  return true;
}

/// Minimal vertex covers as bitmasks, ascending numerically.
inline std::vector<std::uint64_t> minimal_covers(const Graph& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t all = std::uint64_t{1} << g.vertex_count();
  for (std::uint64_t s = 0; s < all; ++s) {
    if (!covers(g, s)) continue;
    bool minimal = true;
    for (Vertex v = 0; v < g.vertex_count() && minimal; ++v) {
      if (((s >> v) & 1U) && covers(g, s & ~(std::uint64_t{1} << v))) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

inline std::vector<std::uint64_t> maximal_independent(const Graph& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t all = std::uint64_t{1} << g.vertex_count();
  for (std::uint64_t s = 0; s < all; ++s) {
    if (!independent(g, s)) continue;
    bool maximal = true;
    for (Vertex v = 0; v < g.vertex_count() && maximal; ++v) {
      if (!((s >> v) & 1U) && independent(g, s | (std::uint64_t{1} << v))) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

inline std::size_t popcount(std::uint64_t s) { return static_cast<std::size_t>(__builtin_popcountll(s)); }

inline bool unmixed(const Graph& g) {
  std::set<std::size_t> sizes;
  for (auto s : minimal_covers(g)) sizes.insert(popcount(s));
  return sizes.size() <= 1;
}

inline std::size_t height(const Graph& g) {
  std::size_t best = g.vertex_count();
  for (auto s : minimal_covers(g)) best = std::min(best, popcount(s));
  return best;
}

/// Perfect matchings counted over all pairings by recursion on the lowest
/// unmatched vertex, trying every partner.
inline std::size_t count_perfect_matchings(const Graph& g, std::uint64_t used = 0) {
  const std::size_t n = g.vertex_count();
  Vertex first = 0;
  while (first < n && ((used >> first) & 1U)) ++first;
  if (first == n) return 1;
  std::size_t total = 0;
  for (Vertex v = first + 1; v < n; ++v) {
    if (!((used >> v) & 1U) && g.adjacent(first, v)) {
      total += count_perfect_matchings(g, used | (std::uint64_t{1} << first) | (std::uint64_t{1} << v));
    }
  }
  return total;
}

/// Some alternating cycle of length r exists: distinct i_1..i_r with
/// y_{i_k} x_{i_{k+1}} ∈ E cyclically. Tries every ordered selection.
inline bool has_cycle_of_length(const cmg::PairedLabeling& pl, std::size_t r) {
  const std::size_t n = pl.n();
  if (r < 2 || r > n) return false;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    bool ok = true;
    for (std::size_t k = 0; k < r && ok; ++k) ok = pl.graph().adjacent(pl.y(idx[k]), pl.x(idx[(k + 1) % r]));
    if (ok) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

/// Shelling by trying every facet permutation against the definition.
inline bool shellable(const std::vector<std::uint64_t>& facets) {
  std::vector<std::size_t> order(facets.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 1; i < order.size() && ok; ++i) {
      const std::uint64_t fi = facets[order[i]];
      for (std::size_t j = 0; j < i && ok; ++j) {
        const std::uint64_t diff = fi & ~facets[order[j]];
        bool found = false;
        for (std::size_t k = 0; k < i && !found; ++k) {
          const std::uint64_t dk = fi & ~facets[order[k]];
          found = popcount(dk) == 1 && (dk & diff);
        }
        ok = found;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

/// Random labeled graph on x1..xn, y1..yn with all pair edges, no y-y edges
/// and each other edge present with probability p.
inline Graph random_class_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  std::vector<cmg::NamedEdge> edges;
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 1; i <= n; ++i) {
    edges.emplace_back("x" + std::to_string(i), "y" + std::to_string(i));
    for (std::size_t j = 1; j <= n; ++j) {
      if (i < j && coin(rng)) edges.emplace_back("x" + std::to_string(i), "x" + std::to_string(j));
      if (i != j && coin(rng)) edges.emplace_back("x" + std::to_string(i), "y" + std::to_string(j));
    }
  }
  return Graph(names, edges);
}

inline cmg::PairedLabeling identity_labeling(const Graph& g) {
  std::vector<cmg::NamedEdge> pairs;
  for (std::size_t i = 1; 2 * i <= g.vertex_count(); ++i) pairs.emplace_back("x" + std::to_string(i), "y" + std::to_string(i));
  return cmg::PairedLabeling::from_names(g, pairs);
}

}  // namespace oracle

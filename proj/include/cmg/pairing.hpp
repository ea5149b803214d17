#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmg/enumerate.hpp"
#include "cmg/graph.hpp"
#include "cmg/verdict.hpp"

namespace cmg {

/// A graph with a fixed partition X ⊔ Y and matching x_i y_i such that X is
/// a minimal vertex cover and Y a maximal independent set.
///
/// Pair indices are 0-based in the API and 1-based in every rendered form.
class PairedLabeling {
 public:
  /// Throws StructureError if the pairs do not form a valid labeling of g.
  PairedLabeling(Graph g, std::vector<std::pair<Vertex, Vertex>> pairs);
  static PairedLabeling from_names(Graph g, const std::vector<NamedEdge>& pairs);

  const Graph& graph() const { return graph_; }
  std::size_t n() const { return pairs_.size(); }
  Vertex x(std::size_t i) const { return pairs_[i].first; }
  Vertex y(std::size_t i) const { return pairs_[i].second; }
  const std::vector<std::pair<Vertex, Vertex>>& pairs() const { return pairs_; }
  VertexSet xs() const { return xs_; }
  VertexSet ys() const { return ys_; }
  std::vector<NamedEdge> named_pairs() const;

  /// Same pairs over another graph on the same vertex names; validated.
  PairedLabeling with_graph(Graph g) const;

  /// x_i y_j ∈ E(G) (i, j 0-based).
  bool xy(std::size_t i, std::size_t j) const { return graph_.adjacent(x(i), y(j)); }
  bool xx(std::size_t i, std::size_t j) const { return graph_.adjacent(x(i), x(j)); }

 private:
  Graph graph_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  VertexSet xs_;
  VertexSet ys_;
};

/// Reason the pairs fail the labeling invariants, or nullopt when valid.
std::optional<std::string> labeling_problem(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs);

/// Picks the lexicographically first minimum vertex cover that admits an
/// X-to-Y perfect matching and pairs it by the lexicographically first such
/// matching. Throws ClassError when g is not in the class and
/// StructureError (naming a Hall-deficient set) when no cover can be matched.
PairedLabeling find_star_labeling(const Graph& g);

/// Every valid labeling of g, up to the order of the pairs (pairs are listed
/// in x-name order).
std::vector<PairedLabeling> all_star_labelings(const Graph& g);

struct CycleWitness {
  std::vector<std::size_t> indices;  // 0-based, r >= 2, smallest index first
};

/// Shortest alternating cycle C_{i1...ir} with r <= max_r (unbounded when
/// absent); ties broken by the lexicographically smallest index sequence.
std::optional<CycleWitness> find_cycle(const PairedLabeling& pl, std::optional<std::size_t> max_r = std::nullopt);

struct Relabeling {
  PairedLabeling labeling;
  /// permutation[k] = old index now at position k.
  std::vector<std::size_t> permutation;
};

/// Simultaneous relabeling so that x_i y_j ∈ E implies i <= j, taking the
/// linear extension of x_i ⪯ x_j :⇔ x_i y_j ∈ E that always picks the
/// minimal element with the smallest x name. Throws PreconditionError when
/// the relation is not antisymmetric or not transitive.
Relabeling relabel_for_double_star(const PairedLabeling& pl);

/// First (i, j), i != j, with x_i y_j ∈ E and i > j; nullopt when the
/// labeling already satisfies x_i y_j ∈ E ⇒ i <= j.
std::optional<std::pair<std::size_t, std::size_t>> double_star_violation(const PairedLabeling& pl);

/// True iff the pair edges are the only perfect matching. When false the
/// certificate is the second matching obtained by rotating along an
/// alternating cycle.
Verdict unique_perfect_matching(const PairedLabeling& pl);

/// Matching obtained from the labeling matching by re-pairing x_{i_{k+1}}
/// with y_{i_k} around the cycle.
Matching rotate_along(const PairedLabeling& pl, const CycleWitness& cycle);

}  // namespace cmg

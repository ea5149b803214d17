#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "cmg/graph.hpp"
#include "cmg/verdict.hpp"

namespace cmg {

/// All maximal independent sets, in lex order of their sorted names.
/// An edgeless graph has the single set V; the empty graph has {∅}.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

/// Inclusion-minimal vertex covers, the complements of the maximal
/// independent sets, in lex order of their sorted names.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);

/// Size of a largest independent set.
std::size_t independence_number(const Graph& g);

/// Minimum vertex-cover cardinality (height of the edge ideal); 0 when edgeless.
std::size_t height(const Graph& g);

struct ClassMembership {
  std::size_t vertex_count = 0;
  std::size_t height = 0;
  bool has_isolated = false;
  bool in_class = false;  // vertex_count == 2*height and no isolated vertex
};

ClassMembership classify(const Graph& g);

/// True iff all minimal vertex covers share one cardinality. Certificate:
/// SizeProfile with two covers of different sizes when false.
Verdict is_unmixed_bruteforce(const Graph& g);

/// SizeProfile of a family of sets, with the first smallest and first
/// largest members as witnesses when sizes differ.
SizeProfile size_profile(const Graph& g, const std::vector<VertexSet>& sets);

using Matching = std::vector<Edge>;

/// Perfect matchings by backtracking on the lowest unmatched vertex, in lex
/// order of partner choices. Stops after `limit` matchings.
std::vector<Matching> perfect_matchings(const Graph& g,
                                        std::size_t limit = std::numeric_limits<std::size_t>::max());

}  // namespace cmg

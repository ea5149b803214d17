#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmg/graph.hpp"
#include "cmg/verdict.hpp"

namespace cmg {

/// Simplicial complex given by its facets over a named vertex set.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Facets are sorted; throws InputError when one facet contains another,
  /// when a declared vertex lies in no facet, or on more than 64 vertices.
  SimplicialComplex(std::vector<std::string> vertices, std::vector<VertexSet> facets);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  /// Largest facet size minus one; -1 for the complex {∅}.
  int dimension() const;
  NameSet names_of(VertexSet s) const;
  bool contains_face(VertexSet s) const;

  /// Every face including ∅, ordered by size then lex. Throws CapacityError
  /// once more than `limit` distinct faces are found.
  std::vector<VertexSet> faces(std::size_t limit) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<VertexSet> facets_;
};

/// Δ(G): faces are the independent sets of g, facets the maximal ones.
SimplicialComplex complementary_complex(const Graph& g);

/// True iff all facets have one size. Certificate: SizeProfile of facets.
Verdict is_pure(const SimplicialComplex& c);

/// Facet graph connectivity under codimension-one intersections.
/// Certificate: a FacetChain walk through all facets when true, the
/// FacetComponents partition when false. Throws PreconditionError if c is
/// not pure.
Verdict is_strongly_connected(const SimplicialComplex& c);

inline constexpr std::size_t kDefaultShellingFacetLimit = 20;

struct ShellingSearch {
  std::optional<std::vector<VertexSet>> order;
  std::size_t states = 0;  // distinct partial facet sets visited
};

/// Backtracking search for a shelling order over subsets of placed facets,
/// remembering dead subsets. Throws PreconditionError if c is not pure and
/// CapacityError above `facet_limit` facets.
ShellingSearch find_shelling(const SimplicialComplex& c, std::size_t facet_limit = kDefaultShellingFacetLimit);

/// Checks `order` against the shelling definition directly: a permutation of
/// the facets such that for all j < i some v ∈ F_i \ F_j and k < i have
/// F_i \ F_k = {v}. Shares no code with find_shelling.
bool is_shelling_order(const SimplicialComplex& c, std::span<const VertexSet> order);

/// One facet per line, vertex names separated by spaces.
std::string format_complex(const SimplicialComplex& c);

}  // namespace cmg

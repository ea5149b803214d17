#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cmg/graph.hpp"
#include "cmg/pairing.hpp"

namespace cmg {

/// O_i(G): every edge x_k y_i with k != i is rewired to x_k x_i. The labeling
/// of `pl` stays valid for the result. `i` is 0-based; throws InputError when
/// out of range.
Graph o_operator(const PairedLabeling& pl, std::size_t i);

/// O_T(G) = O_{i1} O_{i2} ... O_{il}(G). The operators act on disjoint
/// y-stars, so the result does not depend on the order of `t`. Edges created
/// by several steps are kept once.
Graph o_set(const PairedLabeling& pl, std::span<const std::size_t> t);

/// O_[n](G)|_X, a graph on the x-vertices only.
Graph restricted_o_full(const PairedLabeling& pl);

/// One bipartite block B_i with its sides.
struct BGraftBlock {
  Graph graph;
  std::vector<std::string> x_side;
  std::vector<std::string> y_side;
};

/// H_0 must have vertices named 1..p; block k (0-based) expands vertex k+1.
struct BGraftSpec {
  Graph h0;
  std::vector<BGraftBlock> blocks;
};

struct GraftResult {
  Graph graph;
  PairedLabeling labeling;
};

/// The B-grafted graph G(H_0; B_1, ..., B_p): block edges inside each block
/// plus all of X_i × X_j for every edge ij of H_0. The labeling pairs each x
/// with its partner in the lexicographically first perfect matching of its
/// block. Throws SpecError on malformed blocks and StructureError when a
/// block has no perfect matching.
GraftResult b_graft(const BGraftSpec& spec);

}  // namespace cmg

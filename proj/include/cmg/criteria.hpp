#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmg/complex.hpp"
#include "cmg/homology.hpp"
#include "cmg/pairing.hpp"
#include "cmg/verdict.hpp"

namespace cmg {

/// Independent routes to Cohen-Macaulayness of an unmixed labeled graph.
enum class Route : char {
  NoShortCycle = 'a',          // no alternating 4-cycle C_ij
  StronglyConnected = 'b',     // Δ(G) strongly connected
  Shellable = 'c',             // Δ(G) shellable
  UniqueMatching = 'd',        // the pair edges are the only perfect matching
  TransformsUnmixed = 'e',     // O_T(G) unmixed for every T ⊆ [n]
  Reisner = 'f',               // homological criterion over a field
};

inline constexpr Route kAllRoutes[] = {Route::NoShortCycle,      Route::StronglyConnected, Route::Shellable,
                                       Route::UniqueMatching,    Route::TransformsUnmixed, Route::Reisner};

char route_letter(Route r);
const char* route_name(Route r);
/// "a,c,f" -> routes; throws InputError on unknown letters.
std::vector<Route> parse_routes(std::string_view text);

struct CmOptions {
  std::vector<Route> routes{std::begin(kAllRoutes), std::end(kAllRoutes)};
  Field field = Field::prime(2);
  /// Route (e) enumerates all 2^n subsets up to this n, then samples.
  std::size_t exact_subset_limit = 12;
  std::size_t sampled_subsets = 4096;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  std::size_t shelling_facet_limit = kDefaultShellingFacetLimit;
  std::size_t homology_face_limit = kDefaultHomologyFaceLimit;
};

struct CmReport {
  Truth value = Truth::Inconclusive;
  Route primary = Route::NoShortCycle;
  std::map<Route, Verdict> routes;
};

/// Structural scan: (i) z_i x_j, y_j x_k ∈ E ⇒ z_i x_k ∈ E for distinct
/// i, j, k and z_i ∈ {x_i, y_i}; (ii) x_i y_j ∈ E ⇒ x_i x_j ∉ E.
/// Certificate: the first ConditionViolation.
Verdict unmixed_structural(const PairedLabeling& pl);

/// Unmixedness of any graph. In-class graphs with a labeling run the
/// structural scan and the cover-size brute force and throw
/// EquivalenceViolation if they disagree; other graphs use brute force only.
Verdict unmixed_verdict(const Graph& g);

/// Evaluates the selected routes, throws PreconditionError when pl is not
/// unmixed, and EquivalenceViolation when two conclusive routes disagree.
/// The overall value comes from route (a) when selected, otherwise from the
/// first conclusive route.
CmReport cm_verdict(const PairedLabeling& pl, const CmOptions& options = {});

/// Single route evaluation, without the unmixedness precondition check.
Verdict evaluate_route(const PairedLabeling& pl, Route route, const CmOptions& options = {});

/// Under x_i y_j ∈ E ⇒ i <= j the structural conditions decide CM outright.
/// Throws PreconditionError if the labeling violates that ordering.
Verdict cm_structural_doublestar(const PairedLabeling& pl);

/// Every minimal vertex cover contains exactly one of x_i, y_i for each i.
/// Certificate: an offending cover.
Verdict minimal_prime_shape(const PairedLabeling& pl);

/// #E <= n^2 when unmixed and #E <= n(n+1)/2 when CM.
Verdict generator_bounds(const PairedLabeling& pl);

Verdict degree_one_exists(const PairedLabeling& pl);

/// Cheap CM decision used as a precondition elsewhere: unmixed by the
/// structural scan and no alternating 4-cycle.
bool is_cohen_macaulay(const PairedLabeling& pl);

/// Re-checks a verdict's certificate from scratch against pl's graph.
/// Returns a description of the problem, or nullopt when the certificate
/// holds up. SearchExhausted is reported as a problem: an exhausted shelling
/// search has no independently checkable witness.
std::optional<std::string> certificate_problem(const PairedLabeling& pl, const Verdict& v);

}  // namespace cmg

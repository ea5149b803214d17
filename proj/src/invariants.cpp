#include "cmg/invariants.hpp"

#include "cmg/criteria.hpp"
#include "cmg/enumerate.hpp"
#include "cmg/errors.hpp"
#include "cmg/graph_io.hpp"
#include "cmg/transform.hpp"

namespace cmg {
namespace {

void require_cm(const PairedLabeling& pl) {
  if (!is_cohen_macaulay(pl)) throw PreconditionError("invariants are defined only for Cohen-Macaulay graphs");
}

}  // namespace

std::vector<NameSet> socle_generators(const PairedLabeling& pl) {
  require_cm(pl);
  const Graph r = restricted_o_full(pl);
  std::vector<NameSet> out;
  for (VertexSet s : maximal_independent_sets(r)) out.push_back(r.names_of(s));
  return out;
}

std::size_t cm_type(const PairedLabeling& pl) {
  const std::size_t generators = socle_generators(pl).size();
  const Graph r = restricted_o_full(pl);
  const std::size_t covers = minimal_vertex_covers(r).size();
  if (covers != generators) {
    throw EquivalenceViolation("minimal cover count differs from socle generator count",
                               format_graph(pl.graph()) + "\nrestriction:\n" + format_graph(r));
  }
  return covers;
}

Verdict is_level(const PairedLabeling& pl) {
  require_cm(pl);
  Verdict v = is_unmixed_bruteforce(restricted_o_full(pl));
  v.route = "level";
  return v;
}

Verdict is_gorenstein(const PairedLabeling& pl) {
  const std::size_t type = cm_type(pl);
  const bool matching_only = pl.graph().edge_count() == pl.n();
  if (matching_only != (type == 1)) {
    throw EquivalenceViolation("Gorenstein test disagrees with type " + std::to_string(type),
                               format_graph(pl.graph()));
  }
  Verdict v;
  v.route = "matching_only";
  v.value = truth(matching_only);
  return v;
}

InvariantReport invariant_report(const PairedLabeling& pl) {
  InvariantReport r;
  r.socle_monomials = socle_generators(pl);
  r.cm_type = cm_type(pl);
  r.level = is_level(pl).holds();
  r.gorenstein = is_gorenstein(pl).holds();
  r.complete_intersection = r.gorenstein;
  return r;
}

nlohmann::json to_json(const InvariantReport& r) {
  return {{"cm_type", r.cm_type},
          {"socle_monomials", r.socle_monomials},
          {"level", r.level},
          {"gorenstein", r.gorenstein},
          {"complete_intersection", r.complete_intersection}};
}

}  // namespace cmg

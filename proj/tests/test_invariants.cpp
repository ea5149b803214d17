#include <doctest.h>

#include "cmg/criteria.hpp"
#include "cmg/enumerate.hpp"
#include "cmg/errors.hpp"
#include "cmg/graph_io.hpp"
#include "cmg/invariants.hpp"
#include "cmg/transform.hpp"
#include "oracles.hpp"

using namespace cmg;

namespace {

PairedLabeling declared(const std::string& text) {
  const GraphFile f = parse_graph_text(text);
  return PairedLabeling::from_names(f.graph, f.pairs);
}

PairedLabeling pairs(int n) { return declared("pairs " + std::to_string(n) + "\n"); }

const char* kExample31 = "pairs 3\nedge x1 y2\nedge x1 y3\nedge x2 y3\n";
const char* kLevelFalse = "pairs 3\nedge x1 y3\nedge x2 y3\n";

}  // namespace

TEST_CASE("oracle confirms the pinned invariant values") {
  // Cover and independent-set counts of the restricted graphs, by subset
  // enumeration, before the library values below are pinned.
  const Graph tri = restricted_o_full(declared(kExample31));
  CHECK(oracle::minimal_covers(tri).size() == 3);
  CHECK(oracle::maximal_independent(tri).size() == 3);
  CHECK(oracle::unmixed(tri));
  const Graph path = restricted_o_full(declared(kLevelFalse));
  CHECK_FALSE(oracle::unmixed(path));
  CHECK(oracle::minimal_covers(restricted_o_full(declared("pairs 2\nedge x1 y2\n"))).size() == 2);
  for (int n = 1; n <= 6; ++n) CHECK(oracle::minimal_covers(restricted_o_full(pairs(n))).size() == 1);
}

TEST_CASE("socle generators") {
  CHECK(socle_generators(declared(kExample31)) == std::vector<NameSet>{{"x1"}, {"x2"}, {"x3"}});
  CHECK(socle_generators(pairs(4)) == std::vector<NameSet>{{"x1", "x2", "x3", "x4"}});
  CHECK(socle_generators(declared("pairs 2\nedge x1 y2\n")) == std::vector<NameSet>{{"x1"}, {"x2"}});
}

TEST_CASE("CM type") {
  CHECK(cm_type(declared(kExample31)) == 3);
  CHECK(cm_type(declared("pairs 2\nedge x1 y2\n")) == 2);
  for (int n = 1; n <= 6; ++n) CHECK(cm_type(pairs(n)) == 1);
}

TEST_CASE("level") {
  CHECK(is_level(declared(kExample31)).holds());
  CHECK(is_level(pairs(3)).holds());
  CHECK(cm_verdict(declared(kLevelFalse)).value == Truth::True);
  const Verdict v = is_level(declared(kLevelFalse));
  CHECK(v.fails());
  CHECK(std::get<SizeProfile>(v.certificate).sizes == std::vector<std::size_t>{1, 2});
}

TEST_CASE("Gorenstein") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(is_gorenstein(pairs(n)).holds());
    const InvariantReport r = invariant_report(pairs(n));
    CHECK(r.gorenstein);
    CHECK(r.complete_intersection);
    CHECK(r.cm_type == 1);
  }
  CHECK(is_gorenstein(declared(kExample31)).fails());
  const PairedLabeling graft = declared(
      "pairs 4\nedge x2 y3\nedge x1 x2\nedge x1 x3\nedge x2 x4\nedge x3 x4\nedge x1 x4\n");
  CHECK(is_gorenstein(graft).fails());
}

TEST_CASE("invariants require Cohen-Macaulay input") {
  const PairedLabeling c4 = declared("pair x1 y1\npair x2 y2\nedge x1 y2\nedge x2 y1\n");
  CHECK_THROWS_AS(socle_generators(c4), PreconditionError);
  CHECK_THROWS_AS(cm_type(c4), PreconditionError);
  CHECK_THROWS_AS(is_level(c4), PreconditionError);
  CHECK_THROWS_AS(is_gorenstein(c4), PreconditionError);
}

TEST_CASE("type is invariant across labelings and matches duality") {
  std::mt19937_64 rng(71);
  int cm = 0;
  for (int trial = 0; trial < 600 && cm < 80; ++trial) {
    const PairedLabeling pl = oracle::identity_labeling(oracle::random_class_graph(2 + trial % 3, 0.25, rng));
    if (!is_cohen_macaulay(pl)) continue;
    ++cm;
    const std::size_t type = cm_type(pl);
    CHECK(socle_generators(pl).size() == type);
    CHECK((type == 1) == (pl.graph().edge_count() == pl.n()));
    for (const PairedLabeling& other : all_star_labelings(pl.graph())) CHECK(cm_type(other) == type);
  }
  CHECK(cm > 40);
}

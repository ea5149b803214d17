#include <doctest.h>

#include "cmg/census.hpp"
#include "cmg/enumerate.hpp"
#include "cmg/errors.hpp"
#include "oracles.hpp"

using namespace cmg;

namespace {

/// Population by the oracle: every subset of optional edges that lands in
/// the class (height by subset enumeration, no isolated vertices).
std::size_t oracle_population(std::size_t n) {
  const ClassEnumerator en(n);
  std::size_t count = 0;
  for (std::uint64_t k = 0; k < en.size(); ++k) {
    const Graph g = en.graph(k);
    bool isolated = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) isolated = isolated || g.degree(v) == 0;
    if (!isolated && 2 * oracle::height(g) == g.vertex_count()) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("enumerator shape") {
  const ClassEnumerator e2(2);
  CHECK(e2.optional_edges().size() == 3);
  CHECK(e2.size() == 8);
  CHECK(e2.graph(0).edge_count() == 2);
  CHECK(ClassEnumerator(1).size() == 1);
  CHECK(ClassEnumerator(3).optional_edges().size() == 9);
  CHECK_THROWS_AS(ClassEnumerator(0), InputError);
  CHECK_THROWS_AS(ClassEnumerator(8), InputError);
}

TEST_CASE("populations confirmed by the oracle, then pinned") {
  CHECK(oracle_population(1) == 1);
  CHECK(oracle_population(2) == 8);
  CHECK(oracle_population(3) == 512);
  CensusOptions o;
  o.n = 1;
  CHECK(cross_validate(o).population == 1);
  o.n = 2;
  const CensusReport r2 = cross_validate(o);
  CHECK(r2.population == 8);
  CHECK(r2.unmixed_count == 5);
  CHECK(r2.cm_count == 4);
  CHECK(r2.violations.empty());
}

TEST_CASE("n = 3 exhaustive census") {
  CensusOptions o;
  o.n = 3;
  const CensusReport r = cross_validate(o);
  CHECK(r.population == 512);
  CHECK(r.unmixed_count == 54);
  CHECK(r.cm_count == 41);
  CHECK(r.type_histogram.count(3) == 1);
  CHECK(r.type_histogram == std::map<std::size_t, std::size_t>{{1, 1}, {2, 24}, {3, 16}});
  CHECK(r.violations.empty());
  CHECK(r.cm_count <= r.unmixed_count);
  CHECK(r.unmixed_count <= r.population);
  for (const auto& [name, tally] : r.checks) {
    INFO(name);
    CHECK(tally.violations == 0);
    CHECK(tally.checked > 0);
  }
}

TEST_CASE("unmixed and CM counts match the oracle at n = 3") {
  const ClassEnumerator en(3);
  std::size_t unmixed = 0;
  std::size_t shellable = 0;
  for (std::uint64_t k = 0; k < en.size(); ++k) {
    const Graph g = en.graph(k);
    if (!oracle::unmixed(g)) continue;
    ++unmixed;
    shellable += oracle::shellable(oracle::maximal_independent(g));
  }
  CHECK(unmixed == 54);
  // Unmixed and shellable: the CM count.
  CHECK(shellable == 41);
}

TEST_CASE("census is deterministic and thread-count independent") {
  CensusOptions o;
  o.n = 4;
  o.mode = CensusMode::Sample;
  o.count = 300;
  o.seed = 42;
  const std::string a = to_json(cross_validate(o)).dump();
  o.threads = 3;
  const std::string b = to_json(cross_validate(o)).dump();
  CHECK(a == b);
  o.seed = 43;
  CHECK(to_json(cross_validate(o)).dump() != a);
}

TEST_CASE("exhaustive mode is capped") {
  CensusOptions o;
  o.n = 5;
  CHECK_THROWS_AS(cross_validate(o), CapacityError);
  CHECK(parse_census_mode("sample") == CensusMode::Sample);
  CHECK_THROWS_AS(parse_census_mode("all"), InputError);
}

TEST_CASE("histogram csv") {
  CensusOptions o;
  o.n = 2;
  CHECK(histogram_csv(cross_validate(o)) == "type,count\n1,1\n2,3\n");
}

// Acceptance report: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cmg/census.hpp"
#include "cmg/complex.hpp"
#include "cmg/criteria.hpp"
#include "cmg/enumerate.hpp"
#include "cmg/graph_io.hpp"
#include "cmg/homology.hpp"
#include "cmg/invariants.hpp"
#include "cmg/transform.hpp"
#include "../oracles.hpp"

using namespace cmg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& command) {
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  r.status = pclose(pipe);
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
  failures += !ok;
}

std::string fixture(const char* name) { return std::string(CMG_SOURCE_DIR) + "/tests/fixtures/" + name; }
std::string golden(const char* name) { return std::string(CMG_SOURCE_DIR) + "/tests/golden/" + name; }

std::size_t violations(const CensusReport& r, const std::string& check) { return r.checks.at(check).violations; }
std::size_t checked(const CensusReport& r, const std::string& check) { return r.checks.at(check).checked; }

PairedLabeling declared(const std::string& path) {
  const GraphFile f = read_graph_file(path);
  return PairedLabeling::from_names(f.graph, f.pairs);
}

}  // namespace

int main() {
  const std::string cli = CMG_CLI_PATH;

  {
    const auto t = Clock::now();
    const Run r = run(cli + " transform --set 2,3 " + fixture("example3_1.graph"));
    const double s = seconds_since(t);
    const bool ok = r.status == 0 && r.out == slurp(golden("example3_1_T23.graph")) && s < 1.0;
    report(1, ok, "Example 3.1 O_{2,3} matches golden, " + std::to_string(s) + " s");
  }
  {
    const auto t = Clock::now();
    const Run r = run(cli + " graft --h0 " + fixture("example5_1_h0.graph") + " --block " + fixture("example5_1_b1.graph") +
                      " --block " + fixture("example5_1_b2.graph") + " --block " + fixture("example5_1_b3.graph"));
    const double s = seconds_since(t);
    const bool ok = r.status == 0 && r.out == slurp(golden("example5_1_graft.graph")) && s < 1.0;
    report(2, ok, "Example 5.1 graft matches golden, " + std::to_string(s) + " s");
  }

  CensusOptions options;
  auto t = Clock::now();
  options.n = 2;
  const CensusReport c2 = cross_validate(options);
  options.n = 3;
  const CensusReport c3 = cross_validate(options);
  const double small_s = seconds_since(t);
  t = Clock::now();
  options.n = 4;
  options.mode = CensusMode::Sample;
  options.count = 10000;
  options.seed = 42;
  const CensusReport c4 = cross_validate(options);
  const double sample_s = seconds_since(t);

  {
    bool ok = small_s < 120 && sample_s < 600;
    std::size_t agreed = 0;
    for (const CensusReport* r : {&c2, &c3, &c4}) {
      ok = ok && r->violations.empty() && r->inconclusive_routes.empty();
      ok = ok && checked(*r, "cm_routes_agree") == r->unmixed_count;
      agreed += checked(*r, "cm_routes_agree");
    }
    report(3, ok,
           "six routes agree on " + std::to_string(agreed) + " unmixed graphs (n=2,3 exhaustive: " +
               std::to_string(c2.population + c3.population) + " graphs in " + std::to_string(small_s) +
               " s; n=4 sample: " + std::to_string(c4.population) + " graphs in " + std::to_string(sample_s) +
               " s), 0 violations");
  }
  {
    bool ok = true;
    for (const CensusReport* r : {&c2, &c3, &c4}) {
      ok = ok && violations(*r, "prop2_3_unmixed") == 0 && checked(*r, "prop2_3_unmixed") == r->population;
    }
    report(4, ok,
           "structural and cover-size unmixedness agree on " +
               std::to_string(c2.population + c3.population + c4.population) + " graphs");
  }
  {
    bool ok = true;
    std::size_t cm = 0;
    for (const CensusReport* r : {&c2, &c3}) {
      for (const char* check : {"lemma4_2_degree_one", "cor2_2_prime_shape", "cor3_7_cm_bound", "cor3_7_unmixed_bound"}) {
        ok = ok && violations(*r, check) == 0;
      }
      ok = ok && checked(*r, "lemma4_2_degree_one") == r->cm_count && checked(*r, "cor3_7_cm_bound") == r->cm_count;
      ok = ok && checked(*r, "cor2_2_prime_shape") == r->unmixed_count;
      cm += r->cm_count;
    }
    report(5, ok, "degree-one vertex, prime shape and edge bounds hold on all " + std::to_string(cm) + " CM graphs, n <= 3");
  }
  {
    bool ok = true;
    const PairedLabeling ex = declared(fixture("example3_1.graph"));
    const Graph tri = restricted_o_full(ex);
    ok = ok && oracle::minimal_covers(tri).size() == 3 && oracle::maximal_independent(tri).size() == 3;
    ok = ok && cm_type(ex) == 3 && socle_generators(ex) == std::vector<NameSet>{{"x1"}, {"x2"}, {"x3"}};
    for (int n = 1; n <= 6; ++n) {
      const PairedLabeling p = declared(fixture(("pairs" + std::to_string(n) + ".graph").c_str()));
      ok = ok && oracle::minimal_covers(restricted_o_full(p)).size() == 1;
      const InvariantReport r = invariant_report(p);
      ok = ok && r.cm_type == 1 && r.gorenstein;
    }
    ok = ok && oracle::unmixed(tri) && is_level(ex).holds();
    const PairedLabeling lf = declared(fixture("level_false.graph"));
    ok = ok && !oracle::unmixed(restricted_o_full(lf)) && is_level(lf).fails();
    report(6, ok, "type(Ex 3.1) = 3 with socle x1, x2, x3; type(pairs n) = 1 and Gorenstein for n = 1..6; level true/false as expected");
  }
  {
    bool ok = true;
    for (const CensusReport* r : {&c2, &c3}) {
      ok = ok && violations(*r, "reisner_f2_vs_a") == 0 && violations(*r, "reisner_q_vs_a") == 0;
      ok = ok && checked(*r, "reisner_q_vs_a") == r->unmixed_count;
    }
    const Verdict v = reisner_cm(complementary_complex(declared(fixture("c4.graph")).graph()), Field::prime(2));
    const auto* w = std::get_if<HomologyWitness>(&v.certificate);
    ok = ok && v.fails() && w && w->face.empty() && w->offending_dim == 0 && w->reduced_betti.at(1) == 1;
    report(7, ok, "Reisner over GF(2) and Q agrees with route (a) for n <= 3; Delta(C4) rejected with Betti_0 = 1 at the empty face");
  }
  std::cout << "INFO criterion 8: no benchmark tables to reproduce; criteria 1-7 cover the quantitative claims" << std::endl;
  return failures == 0 ? 0 : 1;
}

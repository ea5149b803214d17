#include "cmg/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "cmg/criteria.hpp"
#include "cmg/enumerate.hpp"
#include "cmg/errors.hpp"
#include "cmg/graph_io.hpp"
#include "cmg/invariants.hpp"
#include "cmg/transform.hpp"

namespace cmg {

ClassEnumerator::ClassEnumerator(std::size_t n) : n_(n) {
  if (n == 0 || n > 7) throw InputError("census supports 1 <= n <= 7, got " + std::to_string(n));
  for (std::size_t i = 1; i <= n; ++i) names_.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names_.push_back("y" + std::to_string(i));
  // Natural order puts x1..xn at ids 0..n-1 and y1..yn at n..2n-1.
  auto x = [](std::size_t i) { return static_cast<Vertex>(i); };
  auto y = [n](std::size_t i) { return static_cast<Vertex>(n + i); };
  for (std::size_t i = 0; i < n; ++i) pair_edges_.emplace_back(x(i), y(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) optional_.emplace_back(x(i), x(j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) optional_.emplace_back(x(i), y(j));
    }
  }
}

Graph ClassEnumerator::graph(std::uint64_t index) const {
  std::vector<NamedEdge> edges;
  auto add = [&](Edge e) { edges.emplace_back(names_[e.u], names_[e.v]); };
  for (Edge e : pair_edges_) add(e);
  for (std::size_t b = 0; b < optional_.size(); ++b) {
    if ((index >> b) & 1U) add(optional_[b]);
  }
  return Graph(names_, edges);
}

PairedLabeling ClassEnumerator::labeling(std::uint64_t index) const {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Edge e : pair_edges_) pairs.emplace_back(e.u, e.v);
  return PairedLabeling(graph(index), std::move(pairs));
}

std::uint64_t ClassEnumerator::sample_index(std::mt19937_64& rng) const {
  std::uint64_t index = 0;
  for (std::size_t b = 0; b < optional_.size(); ++b) index |= (rng() & 1U) << b;
  return index;
}

const std::vector<std::string>& census_check_names() {
  static const std::vector<std::string> names = {
      "labeling_valid",     "prop2_3_unmixed",           "facets_vs_covers",    "o_transform_class",
      "reisner_cm_implies_unmixed", "lemma2_1_matching", "cor2_2_prime_shape",  "cor3_7_unmixed_bound",
      "cm_routes_agree",    "reisner_f2_vs_a",           "reisner_q_vs_a",      "prop3_3_cycles",
      "lemma3_5_relabel",   "theorem3_6_double_star",    "certificates_valid",  "shelling_checker",
      "lemma4_2_degree_one", "cor3_7_cm_bound",          "cor4_4_socle_duality", "cor4_5_gorenstein",
      "labeling_invariance"};
  return names;
}

namespace {

struct Outcome {
  bool in_class = false;
  bool unmixed = false;
  bool cm = false;
  std::size_t type = 0;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::pair<std::string, std::string>> failures;
  std::vector<std::string> inconclusive;
};

class Recorder {
 public:
  explicit Recorder(Outcome& out) : out_(out) {}
  void record(const std::string& check, bool ok, const std::string& detail = {}) {
    out_.checks.emplace_back(check, ok);
    if (!ok) out_.failures.emplace_back(check, detail.empty() ? check + " failed" : detail);
  }
  /// Runs body; any exception counts as a failure of `check`.
  template <class F>
  void guarded(const std::string& check, F&& body) {
    try {
      body();
    } catch (const EquivalenceViolation& e) {
      record(check, false, std::string(e.what()) + "\n" + e.dump());
    } catch (const std::exception& e) {
      record(check, false, e.what());
    }
  }

 private:
  Outcome& out_;
};

std::vector<VertexSet> complements(const Graph& g, std::vector<VertexSet> sets) {
  for (VertexSet& s : sets) s = g.all() - s;
  std::sort(sets.begin(), sets.end(), LexLess{});
  return sets;
}

Outcome evaluate(const ClassEnumerator& en, std::uint64_t index) {
  Outcome out;
  Recorder rec(out);
  const Graph g = en.graph(index);
  out.in_class = classify(g).in_class;
  if (!out.in_class) return out;

  std::optional<PairedLabeling> maybe;
  rec.guarded("labeling_valid", [&] {
    maybe.emplace(en.labeling(index));
    rec.record("labeling_valid", true);
  });
  if (!maybe) return out;
  const PairedLabeling& pl = *maybe;
  const std::size_t n = pl.n();

  const Verdict brute = is_unmixed_bruteforce(g);
  const Verdict structural = unmixed_structural(pl);
  out.unmixed = brute.holds();
  rec.record("prop2_3_unmixed", brute.value == structural.value,
             "structural " + std::string(to_string(structural.value)) + ", cover sizes " + to_string(brute.value));

  rec.record("facets_vs_covers", complements(g, maximal_independent_sets(g)) == minimal_vertex_covers(g));

  std::vector<Verdict> checked_verdicts = {brute, structural};

  const SimplicialComplex delta = complementary_complex(g);
  rec.guarded("reisner_cm_implies_unmixed", [&] {
    const Verdict f = reisner_cm(delta, Field::prime(2));
    rec.record("reisner_cm_implies_unmixed", !f.holds() || out.unmixed, "Reisner CM on a mixed graph");
  });

  if (n <= 3) {
    rec.guarded("labeling_invariance", [&] {
      const bool cm_here = is_cohen_macaulay(pl);
      const std::size_t type_here = cm_here ? cm_type(pl) : 0;
      for (const PairedLabeling& other : all_star_labelings(g)) {
        const bool same = unmixed_structural(other).value == structural.value &&
                          is_cohen_macaulay(other) == cm_here && (!cm_here || cm_type(other) == type_here);
        if (!same) {
          std::string pairs;
          for (const auto& [x, y] : other.named_pairs()) pairs += " " + x + y;
          rec.record("labeling_invariance", false, "verdicts change under labeling" + pairs);
          return;
        }
      }
      rec.record("labeling_invariance", true);
    });
  }

  if (!out.unmixed) {
    for (const Verdict& v : checked_verdicts) {
      auto problem = certificate_problem(pl, v);
      rec.record("certificates_valid", !problem, v.route + ": " + problem.value_or(""));
    }
    return out;
  }

  rec.guarded("o_transform_class", [&] {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> t;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) t.push_back(i);
      }
      if (!classify(o_set(pl, t)).in_class) {
        rec.record("o_transform_class", false, "O_T(G) leaves the class for mask " + std::to_string(mask));
        return;
      }
    }
    rec.record("o_transform_class", true);
  });

  rec.guarded("lemma2_1_matching", [&] {
    const bool has_matching = !perfect_matchings(g, 1).empty();
    const PairedLabeling found = find_star_labeling(g);
    rec.record("lemma2_1_matching", has_matching && found.n() == n);
  });
  rec.record("cor2_2_prime_shape", minimal_prime_shape(pl).holds());
  rec.record("cor3_7_unmixed_bound", g.edge_count() <= n * n,
             std::to_string(g.edge_count()) + " edges exceed n^2");

  CmOptions options;
  std::optional<CmReport> cm;
  rec.guarded("cm_routes_agree", [&] {
    cm = cm_verdict(pl, options);
    rec.record("cm_routes_agree", true);
  });
  if (!cm) return out;
  const Verdict& a = cm->routes.at(Route::NoShortCycle);
  out.cm = a.holds();
  for (const auto& [r, v] : cm->routes) {
    if (!v.conclusive()) out.inconclusive.emplace_back(1, route_letter(r));
    checked_verdicts.push_back(v);
  }

  const Verdict& f2 = cm->routes.at(Route::Reisner);
  rec.record("reisner_f2_vs_a", !f2.conclusive() || f2.value == a.value, "GF(2) Reisner disagrees with route a");
  options.field = Field::rationals();
  const Verdict fq = evaluate_route(pl, Route::Reisner, options);
  checked_verdicts.push_back(fq);
  rec.record("reisner_q_vs_a", !fq.conclusive() || fq.value == a.value, "rational Reisner disagrees with route a");

  const bool unique = unique_perfect_matching(pl).holds();
  const bool no_short = !find_cycle(pl, 2).has_value();
  const bool no_cycle = !find_cycle(pl).has_value();
  rec.record("prop3_3_cycles", unique == no_short && no_short == no_cycle,
             "unique matching / no C_ij / no cycle disagree");

  for (const Verdict& v : checked_verdicts) {
    auto problem = certificate_problem(pl, v);
    rec.record("certificates_valid", !problem, v.route + ": " + problem.value_or(""));
  }

  if (!out.cm) return out;

  rec.guarded("lemma3_5_relabel", [&] {
    const Relabeling re = relabel_for_double_star(pl);
    const bool ok = re.labeling.graph() == g && !double_star_violation(re.labeling);
    rec.record("lemma3_5_relabel", ok, "relabeling is not a (**) labeling of G");
    if (ok) {
      rec.guarded("theorem3_6_double_star", [&] {
        rec.record("theorem3_6_double_star", cm_structural_doublestar(re.labeling).holds(),
                   "(**) structural test rejects a CM graph");
      });
    }
  });

  const Verdict& c = cm->routes.at(Route::Shellable);
  if (const auto* order = std::get_if<ShellingCertificate>(&c.certificate)) {
    std::vector<VertexSet> facets;
    for (const auto& f : order->order) facets.push_back(g.set_of(f));
    rec.record("shelling_checker", is_shelling_order(delta, facets), "search order fails the shelling definition");
  } else {
    rec.record("shelling_checker", false, "CM graph without a shelling order");
  }

  rec.record("lemma4_2_degree_one", degree_one_exists(pl).holds());
  rec.record("cor3_7_cm_bound", g.edge_count() <= n * (n + 1) / 2,
             std::to_string(g.edge_count()) + " edges exceed n(n+1)/2");
  rec.guarded("cor4_4_socle_duality", [&] {
    out.type = cm_type(pl);
    rec.record("cor4_4_socle_duality", out.type >= 1 && socle_generators(pl).size() == out.type);
  });
  rec.guarded("cor4_5_gorenstein", [&] {
    is_gorenstein(pl);
    rec.record("cor4_5_gorenstein", true);
  });
  return out;
}

}  // namespace

const char* to_string(CensusMode m) { return m == CensusMode::Exhaustive ? "exhaustive" : "sample"; }

CensusMode parse_census_mode(std::string_view text) {
  if (text == "exhaustive") return CensusMode::Exhaustive;
  if (text == "sample" || text == "sampled") return CensusMode::Sample;
  throw InputError("unknown census mode '" + std::string(text) + "'");
}

CensusReport cross_validate(const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.mode == CensusMode::Exhaustive && options.n > 4) {
    throw CapacityError("exhaustive census is limited to n <= 4; use sample mode");
  }
  const ClassEnumerator en(options.n);

  std::vector<std::uint64_t> indices;
  if (options.mode == CensusMode::Exhaustive) {
    indices.resize(en.size());
    for (std::uint64_t k = 0; k < en.size(); ++k) indices[k] = k;
  } else {
    std::mt19937_64 rng(options.seed);
    indices.resize(options.count);
    for (auto& k : indices) k = en.sample_index(rng);
  }

  std::vector<Outcome> outcomes(indices.size());
  std::size_t threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<std::size_t>(threads, std::max<std::size_t>(1, indices.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < indices.size();) outcomes[k] = evaluate(en, indices[k]);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CensusReport report;
  report.n = options.n;
  report.mode = options.mode;
  report.seed = options.mode == CensusMode::Sample ? options.seed : 0;
  report.drawn = indices.size();
  for (const auto& name : census_check_names()) report.checks[name];
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const Outcome& o = outcomes[k];
    if (!o.in_class) continue;
    ++report.population;
    report.unmixed_count += o.unmixed;
    report.cm_count += o.cm;
    if (o.cm) ++report.type_histogram[o.type];
    for (const auto& r : o.inconclusive) ++report.inconclusive_routes[r];
    for (const auto& [check, ok] : o.checks) {
      auto& tally = report.checks[check];
      ++tally.checked;
      tally.violations += !ok;
    }
    for (const auto& [check, detail] : o.failures) {
      const std::uint64_t id = options.mode == CensusMode::Exhaustive ? indices[k] : k;
      report.violations.push_back({id, check, detail, format_graph(en.graph(indices[k]))});
    }
  }
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const CensusReport& r, bool include_runtime) {
  nlohmann::json doc;
  doc["schema_version"] = "census-v1";
  doc["n"] = r.n;
  doc["mode"] = to_string(r.mode);
  if (r.mode == CensusMode::Sample) doc["seed"] = r.seed;
  doc["drawn"] = r.drawn;
  doc["population"] = r.population;
  doc["unmixed_count"] = r.unmixed_count;
  doc["cm_count"] = r.cm_count;
  doc["type_histogram"] = nlohmann::json::object();
  for (const auto& [type, count] : r.type_histogram) doc["type_histogram"][std::to_string(type)] = count;
  doc["checks"] = nlohmann::json::object();
  for (const auto& [name, t] : r.checks) doc["checks"][name] = {{"checked", t.checked}, {"violations", t.violations}};
  doc["inconclusive_routes"] = r.inconclusive_routes;
  doc["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations) {
    doc["violations"].push_back({{"index", v.index}, {"check", v.check}, {"detail", v.detail}, {"graph", v.graph}});
  }
  if (include_runtime) doc["runtime_ms"] = r.runtime_ms;
  return doc;
}

std::string histogram_csv(const CensusReport& r) {
  std::ostringstream out;
  out << "type,count\n";
  for (const auto& [type, count] : r.type_histogram) out << type << ',' << count << '\n';
  return out.str();
}

}  // namespace cmg

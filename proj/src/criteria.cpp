#include "cmg/criteria.hpp"

#include <algorithm>
#include <random>

#include "cmg/enumerate.hpp"
#include "cmg/errors.hpp"
#include "cmg/graph_io.hpp"
#include "cmg/transform.hpp"

namespace cmg {

char route_letter(Route r) { return static_cast<char>(r); }

const char* route_name(Route r) {
  switch (r) {
    case Route::NoShortCycle: return "no_short_cycle";
    case Route::StronglyConnected: return "strongly_connected";
    case Route::Shellable: return "shellable";
    case Route::UniqueMatching: return "unique_perfect_matching";
    case Route::TransformsUnmixed: return "transforms_unmixed";
    case Route::Reisner: return "reisner";
  }
  return "unknown";
}

std::vector<Route> parse_routes(std::string_view text) {
  std::vector<Route> out;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    if (c < 'a' || c > 'f') throw InputError(std::string("unknown route '") + c + "'; expected letters a-f");
    const auto r = static_cast<Route>(c);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  if (out.empty()) throw InputError("no routes selected");
  return out;
}

namespace {

std::pair<std::string, std::string> named(const Graph& g, Vertex a, Vertex b) { return {g.name(a), g.name(b)}; }

std::optional<ConditionViolation> structural_violation(const PairedLabeling& pl) {
  const Graph& g = pl.graph();
  const std::size_t n = pl.n();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j || !g.adjacent(pl.y(j), pl.x(k))) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == j || i == k) continue;
        for (Vertex z : {pl.x(i), pl.y(i)}) {
          if (g.adjacent(z, pl.x(j)) && !g.adjacent(z, pl.x(k))) {
            return ConditionViolation{"(i)",
                                      {named(g, z, pl.x(j)), named(g, pl.y(j), pl.x(k))},
                                      {named(g, z, pl.x(k))}};
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && pl.xy(i, j) && pl.xx(i, j)) {
        return ConditionViolation{"(ii)", {named(g, pl.x(i), pl.y(j)), named(g, pl.x(i), pl.x(j))}, {}};
      }
    }
  }
  return std::nullopt;
}

Verdict structural_verdict(const PairedLabeling& pl, const char* route) {
  Verdict v;
  v.route = route;
  if (auto bad = structural_violation(pl)) {
    v.value = Truth::False;
    v.certificate = std::move(*bad);
  } else {
    v.value = Truth::True;
  }
  return v;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> out;
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

std::string diagnostic_dump(const PairedLabeling& pl, const std::map<Route, Verdict>& routes) {
  nlohmann::json doc;
  doc["graph"] = format_graph(pl.graph());
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [x, y] : pl.named_pairs()) pairs.push_back({x, y});
  doc["pairs"] = pairs;
  for (const auto& [r, v] : routes) doc["routes"][std::string(1, route_letter(r))] = to_json(v);
  return doc.dump(2);
}

Verdict transforms_route(const PairedLabeling& pl, const CmOptions& options) {
  Verdict v;
  v.route = route_name(Route::TransformsUnmixed);
  const std::size_t n = pl.n();
  auto check_subset = [&](std::uint64_t mask) -> bool {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) t.push_back(i);
    }
    const Graph g = o_set(pl, t);
    Verdict u = is_unmixed_bruteforce(g);
    if (u.holds()) return true;
    v.value = Truth::False;
    v.certificate = SubsetWitness{one_based(t), std::get<SizeProfile>(u.certificate)};
    return false;
  };
  if (n <= options.exact_subset_limit) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (!check_subset(mask)) return v;
    }
    v.value = Truth::True;
    return v;
  }
  std::mt19937_64 rng(options.seed);
  const std::uint64_t width = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::size_t s = 0; s < options.sampled_subsets; ++s) {
    if (!check_subset(rng() & width)) return v;
  }
  v.value = Truth::Inconclusive;
  v.note = "sampled " + std::to_string(options.sampled_subsets) + " of 2^" + std::to_string(n) +
           " subsets without finding a mixed O_T(G)";
  return v;
}

Verdict shelling_route(const PairedLabeling& pl, const CmOptions& options) {
  Verdict v;
  v.route = route_name(Route::Shellable);
  const SimplicialComplex delta = complementary_complex(pl.graph());
  ShellingSearch search;
  try {
    search = find_shelling(delta, options.shelling_facet_limit);
  } catch (const CapacityError& e) {
    v.value = Truth::Inconclusive;
    v.note = e.what();
    return v;
  }
  if (search.order) {
    ShellingCertificate cert;
    for (VertexSet f : *search.order) cert.order.push_back(delta.names_of(f));
    v.value = Truth::True;
    v.certificate = std::move(cert);
    return v;
  }
  v.value = Truth::False;
  // A shellable complex is strongly connected, so a disconnected facet graph
  // is a checkable witness; otherwise only the exhausted search remains.
  Verdict sc = is_strongly_connected(delta);
  if (sc.fails()) {
    v.certificate = std::move(sc.certificate);
  } else {
    v.certificate = SearchExhausted{search.states};
  }
  return v;
}

}  // namespace

Verdict unmixed_structural(const PairedLabeling& pl) { return structural_verdict(pl, "structural"); }

Verdict unmixed_verdict(const Graph& g) {
  Verdict brute = is_unmixed_bruteforce(g);
  if (!classify(g).in_class) return brute;
  std::optional<PairedLabeling> pl;
  try {
    pl = find_star_labeling(g);
  } catch (const StructureError&) {
    brute.note = "no matched labeling; brute force only";
    return brute;
  }
  Verdict structural = unmixed_structural(*pl);
  if (structural.value != brute.value) {
    throw EquivalenceViolation("structural and cover-size unmixedness disagree",
                               format_graph(g) + "\nstructural: " + to_json(structural).dump() +
                                   "\ncover sizes: " + to_json(brute).dump());
  }
  brute.note = "structural scan agrees";
  return brute;
}

Verdict evaluate_route(const PairedLabeling& pl, Route route, const CmOptions& options) {
  switch (route) {
    case Route::NoShortCycle: {
      Verdict v;
      v.route = route_name(route);
      if (auto c = find_cycle(pl, 2)) {
        v.value = Truth::False;
        v.certificate = CycleCertificate{one_based(c->indices)};
      } else {
        v.value = Truth::True;
      }
      return v;
    }
    case Route::StronglyConnected: {
      Verdict v = is_strongly_connected(complementary_complex(pl.graph()));
      v.route = route_name(route);
      return v;
    }
    case Route::Shellable: return shelling_route(pl, options);
    case Route::UniqueMatching: return unique_perfect_matching(pl);
    case Route::TransformsUnmixed: return transforms_route(pl, options);
    case Route::Reisner: {
      Verdict v;
      try {
        v = reisner_cm(complementary_complex(pl.graph()), options.field, options.homology_face_limit);
      } catch (const CapacityError& e) {
        v.value = Truth::Inconclusive;
        v.note = e.what();
      }
      v.route = route_name(route);
      if (v.note.empty()) v.note = options.field.name();
      return v;
    }
  }
  throw InputError("unknown route");
}

CmReport cm_verdict(const PairedLabeling& pl, const CmOptions& options) {
  if (!unmixed_structural(pl).holds()) {
    throw PreconditionError("the Cohen-Macaulay criteria assume an unmixed graph");
  }
  CmReport report;
  for (Route r : options.routes) report.routes.emplace(r, evaluate_route(pl, r, options));

  const Verdict* reference = nullptr;
  Route reference_route = Route::NoShortCycle;
  for (const auto& [r, v] : report.routes) {
    if (!v.conclusive()) continue;
    if (reference && reference->value != v.value) {
      throw EquivalenceViolation(std::string("routes ") + route_letter(reference_route) + " and " + route_letter(r) +
                                     " disagree",
                                 diagnostic_dump(pl, report.routes));
    }
    if (!reference) {
      reference = &v;
      reference_route = r;
    }
  }
  if (auto it = report.routes.find(Route::NoShortCycle); it != report.routes.end() && it->second.conclusive()) {
    report.primary = Route::NoShortCycle;
    report.value = it->second.value;
  } else if (reference) {
    report.primary = reference_route;
    report.value = reference->value;
  } else {
    report.primary = options.routes.front();
    report.value = Truth::Inconclusive;
  }
  return report;
}

Verdict cm_structural_doublestar(const PairedLabeling& pl) {
  if (auto bad = double_star_violation(pl)) {
    throw PreconditionError("labeling does not satisfy x_i y_j ∈ E ⇒ i <= j: " + pl.graph().name(pl.x(bad->first)) +
                            " " + pl.graph().name(pl.y(bad->second)) + " is an edge");
  }
  return structural_verdict(pl, "double_star_structural");
}

Verdict minimal_prime_shape(const PairedLabeling& pl) {
  Verdict v;
  v.route = "minimal_prime_shape";
  for (VertexSet cover : minimal_vertex_covers(pl.graph())) {
    for (std::size_t i = 0; i < pl.n(); ++i) {
      if (cover.contains(pl.x(i)) == cover.contains(pl.y(i))) {
        v.value = Truth::False;
        v.certificate = SetWitness{pl.graph().names_of(cover)};
        return v;
      }
    }
  }
  v.value = Truth::True;
  return v;
}

bool is_cohen_macaulay(const PairedLabeling& pl) { return unmixed_structural(pl).holds() && !find_cycle(pl, 2); }

Verdict generator_bounds(const PairedLabeling& pl) {
  Verdict v;
  v.route = "generator_bounds";
  EdgeBounds b;
  b.edges = pl.graph().edge_count();
  b.n = pl.n();
  b.unmixed = unmixed_structural(pl).holds();
  b.cohen_macaulay = b.unmixed && !find_cycle(pl, 2);
  b.unmixed_bound = b.n * b.n;
  b.cm_bound = b.n * (b.n + 1) / 2;
  const bool ok = (!b.unmixed || b.edges <= b.unmixed_bound) && (!b.cohen_macaulay || b.edges <= b.cm_bound);
  v.value = truth(ok);
  v.certificate = b;
  return v;
}

Verdict degree_one_exists(const PairedLabeling& pl) {
  Verdict v;
  v.route = "degree_one";
  const Graph& g = pl.graph();
  DegreeWitness w;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    w.degrees.push_back(g.degree(u));
    if (g.degree(u) == 1) w.degree_one.push_back(g.name(u));
  }
  v.value = truth(!w.degree_one.empty());
  v.certificate = std::move(w);
  return v;
}

}  // namespace cmg

#include <algorithm>
#include <set>

#include "cmg/criteria.hpp"
#include "cmg/enumerate.hpp"
#include "cmg/errors.hpp"
#include "cmg/transform.hpp"

namespace cmg {
namespace {

using Problem = std::optional<std::string>;

std::string join(const NameSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + s[i];
  return out + "}";
}

std::optional<VertexSet> resolve(const Graph& g, const NameSet& names) {
  VertexSet s;
  for (const auto& name : names) {
    auto v = g.find(name);
    if (!v) return std::nullopt;
    s.insert(*v);
  }
  return s;
}

bool is_minimal_cover(const Graph& g, VertexSet s) {
  if (!g.is_vertex_cover(s)) return false;
  for (Vertex v : s) {
    if (g.is_vertex_cover(s - VertexSet::single(v))) return false;
  }
  return true;
}

bool is_maximal_independent(const Graph& g, VertexSet s) {
  if (!g.is_independent(s)) return false;
  for (Vertex v : g.all() - s) {
    if (!g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

bool adjacent_facets(VertexSet a, VertexSet b) { return a.size() == b.size() && (a & b).size() + 1 == a.size(); }

Problem check_mixed(const Graph& g, const SizeProfile& p, bool covers) {
  if (p.witnesses.size() != 2) return "expected two witnesses";
  std::vector<VertexSet> sets;
  for (const auto& w : p.witnesses) {
    auto s = resolve(g, w);
    if (!s) return "witness " + join(w) + " names unknown vertices";
    if (covers ? !is_minimal_cover(g, *s) : !is_maximal_independent(g, *s)) {
      return "witness " + join(w) + (covers ? " is not a minimal vertex cover" : " is not a facet");
    }
    sets.push_back(*s);
  }
  if (sets[0].size() == sets[1].size()) return "witnesses have equal size";
  return std::nullopt;
}

Problem check_cycle(const PairedLabeling& pl, const CycleCertificate& c) {
  const auto& idx = c.indices;
  if (idx.size() < 2) return "cycle needs at least two pairs";
  std::set<std::size_t> seen;
  for (std::size_t i : idx) {
    if (i < 1 || i > pl.n()) return "pair index " + std::to_string(i) + " out of range";
    if (!seen.insert(i).second) return "pair index " + std::to_string(i) + " repeated";
  }
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const std::size_t a = idx[k] - 1;
    const std::size_t b = idx[(k + 1) % idx.size()] - 1;
    if (!pl.graph().adjacent(pl.y(a), pl.x(b))) {
      return "missing edge " + pl.graph().name(pl.y(a)) + " " + pl.graph().name(pl.x(b));
    }
  }
  return std::nullopt;
}

Problem check_matching(const PairedLabeling& pl, const MatchingCertificate& m, bool second) {
  const Graph& g = pl.graph();
  VertexSet covered;
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const auto& [a, b] : m.edges) {
    auto u = g.find(a);
    auto v = g.find(b);
    if (!u || !v) return "matching names unknown vertices";
    if (!g.adjacent(*u, *v)) return "matching uses non-edge " + a + " " + b;
    if (covered.contains(*u) || covered.contains(*v)) return "matching reuses a vertex";
    covered.insert(*u);
    covered.insert(*v);
    edges.insert(std::minmax(*u, *v));
  }
  if (covered != g.all()) return "matching is not perfect";
  std::set<std::pair<Vertex, Vertex>> own;
  for (const auto& [x, y] : pl.pairs()) own.insert(std::minmax(x, y));
  if (second && own == edges) return "matching equals the pair matching";
  if (!second && own != edges) return "matching differs from the pair matching";
  return std::nullopt;
}

Problem check_facet_list(const Graph& g, const std::vector<NameSet>& listed, std::vector<VertexSet>& out) {
  for (const auto& f : listed) {
    auto s = resolve(g, f);
    if (!s) return "facet " + join(f) + " names unknown vertices";
    if (!is_maximal_independent(g, *s)) return join(f) + " is not a facet";
    out.push_back(*s);
  }
  return std::nullopt;
}

bool same_facets(const Graph& g, std::vector<VertexSet> listed) {
  std::sort(listed.begin(), listed.end(), LexLess{});
  listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
  return listed == maximal_independent_sets(g);
}

Problem check_chain(const Graph& g, const FacetChain& chain) {
  std::vector<VertexSet> facets;
  if (auto p = check_facet_list(g, chain.facets, facets)) return p;
  for (std::size_t i = 0; i + 1 < facets.size(); ++i) {
    if (!adjacent_facets(facets[i], facets[i + 1])) {
      return join(chain.facets[i]) + " and " + join(chain.facets[i + 1]) + " do not share a codimension-one face";
    }
  }
  if (!same_facets(g, facets)) return "walk does not visit every facet";
  return std::nullopt;
}

Problem check_components(const Graph& g, const FacetComponents& fc) {
  if (fc.components.size() < 2) return "need at least two components";
  std::vector<std::vector<VertexSet>> parts;
  std::vector<VertexSet> all;
  for (const auto& comp : fc.components) {
    if (comp.empty()) return "empty component";
    parts.emplace_back();
    if (auto p = check_facet_list(g, comp, parts.back())) return p;
    all.insert(all.end(), parts.back().begin(), parts.back().end());
  }
  const std::size_t listed = all.size();
  std::sort(all.begin(), all.end(), LexLess{});
  if (std::unique(all.begin(), all.end()) - all.begin() != static_cast<std::ptrdiff_t>(listed)) {
    return "facet listed twice";
  }
  if (!same_facets(g, all)) return "components do not partition the facets";
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      for (VertexSet f : parts[a]) {
        for (VertexSet h : parts[b]) {
          if (adjacent_facets(f, h)) return "facets in different components are adjacent";
        }
      }
    }
  }
  return std::nullopt;
}

Problem check_shelling(const Graph& g, const ShellingCertificate& s) {
  const SimplicialComplex delta = complementary_complex(g);
  std::vector<VertexSet> order;
  for (const auto& f : s.order) {
    auto v = resolve(g, f);
    if (!v) return "shelling names unknown vertices";
    order.push_back(*v);
  }
  if (!is_shelling_order(delta, order)) return "order is not a shelling";
  return std::nullopt;
}

Problem check_subset(const PairedLabeling& pl, const SubsetWitness& w) {
  std::vector<std::size_t> t;
  for (std::size_t i : w.subset) {
    if (i < 1 || i > pl.n()) return "subset index " + std::to_string(i) + " out of range";
    t.push_back(i - 1);
  }
  return check_mixed(o_set(pl, t), w.covers, true);
}

Problem check_homology(const Graph& g, const HomologyWitness& h) {
  Field field = Field::prime(2);
  if (h.field == "Q") {
    field = Field::rationals();
  } else if (h.field.starts_with("GF(") && h.field.ends_with(")")) {
    field = Field::parse(h.field.substr(3, h.field.size() - 4));
  } else {
    return "unknown field " + h.field;
  }
  auto face = resolve(g, h.face);
  if (!face) return "face names unknown vertices";
  const SimplicialComplex delta = complementary_complex(g);
  if (!delta.contains_face(*face)) return join(h.face) + " is not a face";
  const HomologyProfile p = link_profile(delta, *face, field);
  if (p.link_dim != h.link_dim || p.reduced_betti != h.reduced_betti) return "recomputed link homology differs";
  if (h.offending_dim < -1 || h.offending_dim >= h.link_dim) return "offending dimension is not below the link dimension";
  if (h.reduced_betti[static_cast<std::size_t>(h.offending_dim + 1)] == 0) return "homology vanishes in the offending dimension";
  return std::nullopt;
}

Problem check_condition(const Graph& g, const ConditionViolation& c) {
  for (const auto& [a, b] : c.present) {
    auto u = g.find(a);
    auto v = g.find(b);
    if (!u || !v || !g.adjacent(*u, *v)) return "edge " + a + " " + b + " is not present";
  }
  for (const auto& [a, b] : c.absent) {
    auto u = g.find(a);
    auto v = g.find(b);
    if (!u || !v) return "unknown vertex in " + a + " " + b;
    if (g.adjacent(*u, *v)) return "edge " + a + " " + b + " is present";
  }
  if (c.condition == "(i)" && (c.present.size() != 2 || c.absent.size() != 1)) return "malformed condition (i) witness";
  if (c.condition == "(ii)" && c.present.size() != 2) return "malformed condition (ii) witness";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> certificate_problem(const PairedLabeling& pl, const Verdict& v) {
  const Graph& g = pl.graph();
  if (v.fails() && std::holds_alternative<std::monostate>(v.certificate)) return "false verdict without certificate";
  return std::visit(
      [&](const auto& c) -> Problem {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SizeProfile>) {
          if (!v.fails()) return std::nullopt;
          return check_mixed(g, c, v.route != "facet_sizes");
        } else if constexpr (std::is_same_v<T, CycleCertificate>) {
          return check_cycle(pl, c);
        } else if constexpr (std::is_same_v<T, MatchingCertificate>) {
          return check_matching(pl, c, v.fails());
        } else if constexpr (std::is_same_v<T, FacetChain>) {
          return check_chain(g, c);
        } else if constexpr (std::is_same_v<T, FacetComponents>) {
          return check_components(g, c);
        } else if constexpr (std::is_same_v<T, ShellingCertificate>) {
          return check_shelling(g, c);
        } else if constexpr (std::is_same_v<T, SearchExhausted>) {
          return "exhausted shelling search has no checkable witness";
        } else if constexpr (std::is_same_v<T, SubsetWitness>) {
          return check_subset(pl, c);
        } else if constexpr (std::is_same_v<T, HomologyWitness>) {
          return check_homology(g, c);
        } else if constexpr (std::is_same_v<T, ConditionViolation>) {
          return check_condition(g, c);
        } else {
          return std::nullopt;
        }
      },
      v.certificate);
}

}  // namespace cmg

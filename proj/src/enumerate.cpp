#include "cmg/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace cmg {

namespace {

// Bron-Kerbosch with pivoting on the complement graph: `chosen` is
// independent, `candidates` are vertices independent of all of `chosen`,
// `excluded` are such vertices already branched on.
void bron_kerbosch(const Graph& g, VertexSet chosen, VertexSet candidates, VertexSet excluded,
                   const std::function<void(VertexSet)>& emit) {
  if (candidates.empty()) {
    if (excluded.empty()) emit(chosen);
    return;
  }
  // Pivot u maximising |candidates ∩ non-neighbours(u)|; only candidates
  // adjacent to u (or u itself) need a branch.
  const VertexSet pool = candidates | excluded;
  Vertex pivot = pool.lowest();
  std::size_t best = 0;
  for (Vertex u : pool) {
    const std::size_t k = (candidates - g.neighbors(u)).size();
    if (k > best) {
      best = k;
      pivot = u;
    }
  }
  VertexSet branch = candidates & (g.neighbors(pivot) | VertexSet::single(pivot));
  for (Vertex v : branch) {
    const VertexSet keep = g.neighbors(v) | VertexSet::single(v);
    bron_kerbosch(g, chosen | VertexSet::single(v), candidates - keep, excluded - keep, emit);
    candidates.erase(v);
    excluded.insert(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  bron_kerbosch(g, VertexSet{}, g.all(), VertexSet{}, [&](VertexSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
  std::vector<VertexSet> out;
  for (VertexSet s : maximal_independent_sets(g)) out.push_back(g.all() - s);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::size_t independence_number(const Graph& g) {
  std::size_t best = 0;
  for (VertexSet s : maximal_independent_sets(g)) best = std::max(best, s.size());
  return best;
}

std::size_t height(const Graph& g) { return g.vertex_count() - independence_number(g); }

ClassMembership classify(const Graph& g) {
  ClassMembership m;
  m.vertex_count = g.vertex_count();
  m.height = height(g);
  m.has_isolated = !g.isolated().empty();
  m.in_class = m.vertex_count == 2 * m.height && !m.has_isolated;
  return m;
}

SizeProfile size_profile(const Graph& g, const std::vector<VertexSet>& sets) {
  SizeProfile p;
  if (sets.empty()) return p;
  const VertexSet* smallest = &sets.front();
  const VertexSet* largest = &sets.front();
  for (const VertexSet& s : sets) {
    p.sizes.push_back(s.size());
    if (s.size() < smallest->size()) smallest = &s;
    if (s.size() > largest->size()) largest = &s;
  }
  std::sort(p.sizes.begin(), p.sizes.end());
  if (smallest->size() != largest->size()) {
    p.witnesses.push_back(g.names_of(*smallest));
    p.witnesses.push_back(g.names_of(*largest));
  }
  return p;
}

Verdict is_unmixed_bruteforce(const Graph& g) {
  Verdict v;
  v.route = "cover_sizes";
  SizeProfile p = size_profile(g, minimal_vertex_covers(g));
  v.value = truth(p.witnesses.empty());
  v.certificate = std::move(p);
  return v;
}

namespace {

void extend_matching(const Graph& g, VertexSet unmatched, Matching& current, std::vector<Matching>& out,
                     std::size_t limit) {
  if (out.size() >= limit) return;
  if (unmatched.empty()) {
    out.push_back(current);
    return;
  }
  const Vertex v = unmatched.lowest();
  for (Vertex w : g.neighbors(v) & unmatched) {
    current.emplace_back(v, w);
    extend_matching(g, unmatched - VertexSet::single(v) - VertexSet::single(w), current, out, limit);
    current.pop_back();
    if (out.size() >= limit) return;
  }
}

}  // namespace

std::vector<Matching> perfect_matchings(const Graph& g, std::size_t limit) {
  std::vector<Matching> out;
  if (g.vertex_count() % 2 != 0 || limit == 0) return out;
  Matching current;
  extend_matching(g, g.all(), current, out, limit);
  return out;
}

}  // namespace cmg

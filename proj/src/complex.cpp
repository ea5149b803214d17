#include "cmg/complex.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "cmg/enumerate.hpp"
#include "cmg/errors.hpp"

namespace cmg {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<VertexSet> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {
  if (vertices_.size() > VertexSet::kCapacity) throw InputError("complex has more than 64 vertices");
  std::sort(facets_.begin(), facets_.end(), LexLess{});
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  VertexSet covered;
  for (std::size_t a = 0; a < facets_.size(); ++a) {
    if (!facets_[a].subset_of(VertexSet::first(vertices_.size()))) throw InputError("facet uses an undeclared vertex");
    covered |= facets_[a];
    for (std::size_t b = 0; b < facets_.size(); ++b) {
      if (a != b && facets_[a].subset_of(facets_[b])) throw InputError("a facet is contained in another facet");
    }
  }
  if (covered != VertexSet::first(vertices_.size())) throw InputError("a declared vertex lies in no facet");
}

int SimplicialComplex::dimension() const {
  std::size_t best = 0;
  for (VertexSet f : facets_) best = std::max(best, f.size());
  return static_cast<int>(best) - 1;
}

NameSet SimplicialComplex::names_of(VertexSet s) const {
  NameSet out;
  for (Vertex v : s) out.push_back(vertices_[v]);
  return out;
}

bool SimplicialComplex::contains_face(VertexSet s) const {
  return std::any_of(facets_.begin(), facets_.end(), [s](VertexSet f) { return s.subset_of(f); });
}

std::vector<VertexSet> SimplicialComplex::faces(std::size_t limit) const {
  std::unordered_set<std::uint64_t> seen;
  for (VertexSet f : facets_) {
    // All submasks of f, including f and ∅.
    std::uint64_t sub = f.bits();
    while (true) {
      if (seen.insert(sub).second && seen.size() > limit) {
        throw CapacityError("complex has more than " + std::to_string(limit) + " faces");
      }
      if (sub == 0) break;
      sub = (sub - 1) & f.bits();
    }
  }
  std::vector<VertexSet> out;
  out.reserve(seen.size());
  for (std::uint64_t bits : seen) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return out;
}

SimplicialComplex complementary_complex(const Graph& g) {
  return SimplicialComplex(g.names(), maximal_independent_sets(g));
}

namespace {

SizeProfile facet_profile(const SimplicialComplex& c) {
  SizeProfile p;
  const auto& fs = c.facets();
  if (fs.empty()) return p;
  VertexSet smallest = fs.front();
  VertexSet largest = fs.front();
  for (VertexSet f : fs) {
    p.sizes.push_back(f.size());
    if (f.size() < smallest.size()) smallest = f;
    if (f.size() > largest.size()) largest = f;
  }
  std::sort(p.sizes.begin(), p.sizes.end());
  if (smallest.size() != largest.size()) {
    p.witnesses.push_back(c.names_of(smallest));
    p.witnesses.push_back(c.names_of(largest));
  }
  return p;
}

bool pure(const SimplicialComplex& c) {
  const auto& fs = c.facets();
  return std::all_of(fs.begin(), fs.end(), [&](VertexSet f) { return f.size() == fs.front().size(); });
}

void require_pure(const SimplicialComplex& c, const char* what) {
  if (!pure(c)) throw PreconditionError(std::string(what) + " is defined for pure complexes only");
}

}  // namespace

Verdict is_pure(const SimplicialComplex& c) {
  Verdict v;
  v.route = "facet_sizes";
  SizeProfile p = facet_profile(c);
  v.value = truth(p.witnesses.empty());
  v.certificate = std::move(p);
  return v;
}

Verdict is_strongly_connected(const SimplicialComplex& c) {
  require_pure(c, "strong connectedness");
  Verdict v;
  v.route = "strongly_connected";
  const auto& fs = c.facets();
  const std::size_t m = fs.size();
  auto adjacent = [&](std::size_t a, std::size_t b) { return (fs[a] & fs[b]).size() + 1 == fs[a].size(); };

  std::vector<int> component(m, -1);
  int count = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (component[s] >= 0) continue;
    std::deque<std::size_t> queue{s};
    component[s] = count;
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t b = 0; b < m; ++b) {
        if (component[b] < 0 && adjacent(a, b)) {
          component[b] = count;
          queue.push_back(b);
        }
      }
    }
    ++count;
  }

  if (count <= 1) {
    // Depth-first walk; consecutive facets in the walk are adjacent.
    FacetChain chain;
    std::vector<bool> visited(m, false);
    std::vector<std::size_t> stack;
    std::size_t seen = 0;
    if (m > 0) {
      stack.push_back(0);
      visited[0] = true;
      seen = 1;
      chain.facets.push_back(c.names_of(fs[0]));
    }
    while (!stack.empty() && seen < m) {
      const std::size_t a = stack.back();
      std::size_t next = m;
      for (std::size_t b = 0; b < m; ++b) {
        if (!visited[b] && adjacent(a, b)) {
          next = b;
          break;
        }
      }
      if (next == m) {
        stack.pop_back();
        if (!stack.empty()) chain.facets.push_back(c.names_of(fs[stack.back()]));
        continue;
      }
      visited[next] = true;
      ++seen;
      stack.push_back(next);
      chain.facets.push_back(c.names_of(fs[next]));
    }
    v.value = Truth::True;
    v.certificate = std::move(chain);
    return v;
  }

  FacetComponents parts;
  parts.components.resize(static_cast<std::size_t>(count));
  for (std::size_t a = 0; a < m; ++a) {
    parts.components[static_cast<std::size_t>(component[a])].push_back(c.names_of(fs[a]));
  }
  v.value = Truth::False;
  v.certificate = std::move(parts);
  return v;
}

namespace {

struct ShellingState {
  const std::vector<VertexSet>& facets;
  std::vector<bool> dead;
  std::vector<std::size_t> order;
  std::size_t states = 0;

  // F may follow the placed facets iff every F \ F_j meets the set of
  // vertices v for which F \ {v} lies in some placed facet.
  bool attaches(std::size_t f, std::uint32_t placed) const {
    if (placed == 0) return true;
    const VertexSet face = facets[f];
    VertexSet attach;
    for (std::uint32_t rest = placed; rest; rest &= rest - 1) {
      const VertexSet diff = face - facets[static_cast<std::size_t>(std::countr_zero(rest))];
      if (diff.size() == 1) attach |= diff;
    }
    for (std::uint32_t rest = placed; rest; rest &= rest - 1) {
      const VertexSet diff = face - facets[static_cast<std::size_t>(std::countr_zero(rest))];
      if (!diff.intersects(attach)) return false;
    }
    return true;
  }

  bool extend(std::uint32_t placed) {
    const std::size_t m = facets.size();
    if (order.size() == m) return true;
    if (dead[placed]) return false;
    ++states;
    for (std::size_t f = 0; f < m; ++f) {
      if ((placed >> f) & 1U) continue;
      if (!attaches(f, placed)) continue;
      order.push_back(f);
      if (extend(placed | (std::uint32_t{1} << f))) return true;
      order.pop_back();
    }
    dead[placed] = true;
    return false;
  }
};

}  // namespace

ShellingSearch find_shelling(const SimplicialComplex& c, std::size_t facet_limit) {
  require_pure(c, "shellability");
  const auto& fs = c.facets();
  if (fs.size() > facet_limit || fs.size() > 24) {
    throw CapacityError("shelling search over " + std::to_string(fs.size()) + " facets exceeds the limit of " +
                        std::to_string(std::min<std::size_t>(facet_limit, 24)));
  }
  ShellingState state{fs, std::vector<bool>(std::size_t{1} << fs.size(), false), {}, 0};
  ShellingSearch out;
  if (state.extend(0)) {
    std::vector<VertexSet> order;
    for (std::size_t f : state.order) order.push_back(fs[f]);
    out.order = std::move(order);
  }
  out.states = state.states;
  return out;
}

bool is_shelling_order(const SimplicialComplex& c, std::span<const VertexSet> order) {
  std::vector<VertexSet> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end(), LexLess{});
  if (sorted != c.facets()) return false;
  for (std::size_t i = 1; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      bool found = false;
      for (Vertex v : order[i] - order[j]) {
        for (std::size_t k = 0; k < i && !found; ++k) {
          found = (order[i] - order[k]) == VertexSet::single(v);
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

std::string format_complex(const SimplicialComplex& c) {
  std::string out;
  for (VertexSet f : c.facets()) {
    bool first = true;
    for (Vertex v : f) {
      if (!first) out += ' ';
      out += c.vertices()[v];
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace cmg

#include "cmg/pairing.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

#include "cmg/errors.hpp"
#include "cmg/graph_io.hpp"

namespace cmg {

namespace {

constexpr int kUnmatched = -1;

// Kuhn's augmenting-path matching of `left` into `right`. Returns, for each
// left position, the matched right vertex or kUnmatched.
struct BipartiteMatcher {
  const Graph& g;
  const std::vector<Vertex>& left;
  VertexSet right;
  std::vector<int> match_left;
  std::vector<int> owner;  // right vertex -> left position

  BipartiteMatcher(const Graph& graph, const std::vector<Vertex>& l, VertexSet r)
      : g(graph), left(l), right(r), match_left(l.size(), kUnmatched), owner(graph.vertex_count(), kUnmatched) {}

  bool augment(std::size_t li, VertexSet& seen) {
    for (Vertex w : g.neighbors(left[li]) & right) {
      if (seen.contains(w)) continue;
      seen.insert(w);
      if (owner[w] == kUnmatched || augment(static_cast<std::size_t>(owner[w]), seen)) {
        owner[w] = static_cast<int>(li);
        match_left[li] = static_cast<int>(w);
        return true;
      }
    }
    return false;
  }

  std::size_t run() {
    std::size_t size = 0;
    for (std::size_t li = 0; li < left.size(); ++li) {
      VertexSet seen;
      if (augment(li, seen)) ++size;
    }
    return size;
  }

  // Left vertices reachable by alternating paths from an unmatched left
  // vertex; their right neighbourhood is one smaller than the set.
  VertexSet hall_violator() const {
    VertexSet reached_left;
    VertexSet reached_right;
    std::deque<std::size_t> queue;
    for (std::size_t li = 0; li < left.size(); ++li) {
      if (match_left[li] == kUnmatched) {
        queue.push_back(li);
        reached_left.insert(left[li]);
        break;
      }
    }
    while (!queue.empty()) {
      const std::size_t li = queue.front();
      queue.pop_front();
      for (Vertex w : (g.neighbors(left[li]) & right) - reached_right) {
        reached_right.insert(w);
        if (owner[w] != kUnmatched) {
          const auto next = static_cast<std::size_t>(owner[w]);
          if (!reached_left.contains(left[next])) {
            reached_left.insert(left[next]);
            queue.push_back(next);
          }
        }
      }
    }
    return reached_left;
  }
};

bool has_perfect_matching(const Graph& g, const std::vector<Vertex>& left, VertexSet right) {
  if (left.size() != right.size()) return false;
  BipartiteMatcher m(g, left, right);
  return m.run() == left.size();
}

std::vector<Vertex> as_list(VertexSet s) { return {s.begin(), s.end()}; }

// Lexicographically first perfect matching of X into Y: each x in name order
// takes the smallest y that still leaves a completable remainder.
std::optional<std::vector<std::pair<Vertex, Vertex>>> first_matching(const Graph& g, VertexSet xs, VertexSet ys) {
  std::vector<Vertex> rest = as_list(xs);
  if (!has_perfect_matching(g, rest, ys)) return std::nullopt;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  VertexSet free_y = ys;
  for (Vertex x : xs) {
    rest.erase(rest.begin());
    bool placed = false;
    for (Vertex y : g.neighbors(x) & free_y) {
      if (has_perfect_matching(g, rest, free_y - VertexSet::single(y))) {
        pairs.emplace_back(x, y);
        free_y.erase(y);
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;
  }
  return pairs;
}

void all_matchings(const Graph& g, const std::vector<Vertex>& xs, std::size_t k, VertexSet free_y,
                   std::vector<std::pair<Vertex, Vertex>>& current,
                   std::vector<std::vector<std::pair<Vertex, Vertex>>>& out) {
  if (k == xs.size()) {
    out.push_back(current);
    return;
  }
  for (Vertex y : g.neighbors(xs[k]) & free_y) {
    current.emplace_back(xs[k], y);
    all_matchings(g, xs, k + 1, free_y - VertexSet::single(y), current, out);
    current.pop_back();
  }
}

std::string render(const Graph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::optional<std::string> labeling_problem(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  if (pairs.empty()) return "a labeling needs at least one pair";
  VertexSet xs;
  VertexSet ys;
  for (const auto& [x, y] : pairs) {
    if (x >= g.vertex_count() || y >= g.vertex_count()) return "pair vertex out of range";
    if (xs.contains(x) || ys.contains(x) || xs.contains(y) || ys.contains(y) || x == y) {
      return "vertex used twice in the labeling";
    }
    if (!g.adjacent(x, y)) return "matching edge " + g.name(x) + " " + g.name(y) + " is missing";
    xs.insert(x);
    ys.insert(y);
  }
  if ((xs | ys) != g.all()) return "labeling does not cover every vertex";
  if (!g.is_independent(ys)) return "Y is not independent";
  if (!g.is_vertex_cover(xs)) return "X is not a vertex cover";
  for (Vertex x : xs) {
    if (g.is_vertex_cover(xs - VertexSet::single(x))) return "X is not a minimal vertex cover";
  }
  for (Vertex x : xs) {
    if (!g.neighbors(x).intersects(ys)) return "Y is not a maximal independent set";
  }
  return std::nullopt;
}

PairedLabeling::PairedLabeling(Graph g, std::vector<std::pair<Vertex, Vertex>> pairs)
    : graph_(std::move(g)), pairs_(std::move(pairs)) {
  if (auto problem = labeling_problem(graph_, pairs_)) throw StructureError("invalid labeling: " + *problem);
  for (const auto& [x, y] : pairs_) {
    xs_.insert(x);
    ys_.insert(y);
  }
}

PairedLabeling PairedLabeling::from_names(Graph g, const std::vector<NamedEdge>& pairs) {
  std::vector<std::pair<Vertex, Vertex>> ids;
  ids.reserve(pairs.size());
  for (const auto& [a, b] : pairs) ids.emplace_back(g.id(a), g.id(b));
  return PairedLabeling(std::move(g), std::move(ids));
}

std::vector<NamedEdge> PairedLabeling::named_pairs() const {
  std::vector<NamedEdge> out;
  for (const auto& [x, y] : pairs_) out.emplace_back(graph_.name(x), graph_.name(y));
  return out;
}

PairedLabeling PairedLabeling::with_graph(Graph g) const {
  if (g.names() != graph_.names()) throw InputError("graphs have different vertex sets");
  return PairedLabeling(std::move(g), pairs_);
}

PairedLabeling find_star_labeling(const Graph& g) {
  const ClassMembership m = classify(g);
  if (!m.in_class) {
    throw ClassError("graph is not in the class: " + std::to_string(m.vertex_count) + " vertices, height " +
                     std::to_string(m.height) + (m.has_isolated ? ", has isolated vertices" : ""));
  }
  std::optional<VertexSet> first_cover;
  for (VertexSet xs : minimal_vertex_covers(g)) {
    if (xs.size() != m.height) continue;
    if (!first_cover) first_cover = xs;
    const VertexSet ys = g.all() - xs;
    if (auto pairs = first_matching(g, xs, ys)) return PairedLabeling(g, std::move(*pairs));
  }
  const VertexSet xs = *first_cover;
  const std::vector<Vertex> left = as_list(xs);
  BipartiteMatcher matcher(g, left, g.all() - xs);
  matcher.run();
  const VertexSet hall = matcher.hall_violator();
  VertexSet reach;
  for (Vertex v : hall) reach |= g.neighbors(v) - xs;
  throw StructureError("no minimum vertex cover has a perfect matching into its complement; Hall condition fails in cover " +
                       render(g, xs) + ": the set " + render(g, hall) + " has only " + std::to_string(reach.size()) +
                       " neighbours in the complement");
}

std::vector<PairedLabeling> all_star_labelings(const Graph& g) {
  std::vector<PairedLabeling> out;
  const ClassMembership m = classify(g);
  if (!m.in_class) return out;
  for (VertexSet xs : minimal_vertex_covers(g)) {
    if (xs.size() != m.height) continue;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> matchings;
    std::vector<std::pair<Vertex, Vertex>> current;
    all_matchings(g, as_list(xs), 0, g.all() - xs, current, matchings);
    for (auto& pairs : matchings) out.emplace_back(g, std::move(pairs));
  }
  return out;
}

std::optional<CycleWitness> find_cycle(const PairedLabeling& pl, std::optional<std::size_t> max_r) {
  const std::size_t n = pl.n();
  // Arc i -> j iff y_i x_j ∈ E.
  auto arc = [&](std::size_t i, std::size_t j) { return i != j && pl.graph().adjacent(pl.y(i), pl.x(j)); };
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  std::size_t best_len = kInf;
  std::size_t best_start = 0;
  std::vector<std::size_t> best_dist;
  for (std::size_t s = 0; s < n; ++s) {
    // Distances to s within nodes >= s, by BFS on reversed arcs.
    std::vector<std::size_t> dist(n, kInf);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t u = s; u < n; ++u) {
        if (dist[u] == kInf && arc(u, v)) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    std::size_t len = kInf;
    for (std::size_t j = s + 1; j < n; ++j) {
      if (arc(s, j) && dist[j] != kInf) len = std::min(len, dist[j] + 1);
    }
    if (len < best_len) {
      best_len = len;
      best_start = s;
      best_dist = std::move(dist);
    }
  }
  if (best_len == kInf) return std::nullopt;
  if (max_r && best_len > *max_r) return std::nullopt;

  CycleWitness w;
  w.indices.push_back(best_start);
  std::size_t current = best_start;
  for (std::size_t remaining = best_len; remaining > 1; --remaining) {
    for (std::size_t j = best_start + 1; j < n; ++j) {
      if (arc(current, j) && best_dist[j] == remaining - 1) {
        w.indices.push_back(j);
        current = j;
        break;
      }
    }
  }
  return w;
}

std::optional<std::pair<std::size_t, std::size_t>> double_star_violation(const PairedLabeling& pl) {
  for (std::size_t i = 0; i < pl.n(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (pl.xy(i, j)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

Relabeling relabel_for_double_star(const PairedLabeling& pl) {
  const std::size_t n = pl.n();
  const Graph& g = pl.graph();
  auto pair_name = [&](std::size_t i) { return g.name(pl.x(i)); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pl.xy(i, j) && pl.xy(j, i)) {
        throw PreconditionError("relation is not antisymmetric: " + pair_name(i) + " and " + pair_name(j) +
                                " precede each other (alternating 4-cycle)");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !pl.xy(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || !pl.xy(j, k)) continue;
        if (!pl.xy(i, k)) {
          throw PreconditionError("relation is not transitive: " + pair_name(i) + " ⪯ " + pair_name(j) + " ⪯ " +
                                  pair_name(k) + " but not " + pair_name(i) + " ⪯ " + pair_name(k));
        }
      }
    }
  }

  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && pl.xy(i, j)) ++indegree[j];
    }
  }
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> permutation;
  while (permutation.size() < n) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!placed[i] && indegree[i] == 0 && (pick == n || pl.x(i) < pl.x(pick))) pick = i;
    }
    if (pick == n) throw PreconditionError("relation has a cycle");
    placed[pick] = true;
    permutation.push_back(pick);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != pick && pl.xy(pick, j)) --indegree[j];
    }
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t k : permutation) pairs.push_back(pl.pairs()[k]);
  return Relabeling{PairedLabeling(pl.graph(), std::move(pairs)), std::move(permutation)};
}

Matching rotate_along(const PairedLabeling& pl, const CycleWitness& cycle) {
  std::vector<Vertex> partner(pl.n());
  for (std::size_t i = 0; i < pl.n(); ++i) partner[i] = pl.y(i);
  const std::size_t r = cycle.indices.size();
  for (std::size_t k = 0; k < r; ++k) {
    partner[cycle.indices[(k + 1) % r]] = pl.y(cycle.indices[k]);
  }
  Matching m;
  for (std::size_t i = 0; i < pl.n(); ++i) m.emplace_back(pl.x(i), partner[i]);
  std::sort(m.begin(), m.end());
  return m;
}

Verdict unique_perfect_matching(const PairedLabeling& pl) {
  Verdict v;
  v.route = "unique_perfect_matching";
  const auto matchings = perfect_matchings(pl.graph(), 2);
  if (matchings.size() < 2) {
    v.value = Truth::True;
    MatchingCertificate cert;
    for (const auto& [x, y] : pl.pairs()) cert.edges.emplace_back(pl.graph().name(x), pl.graph().name(y));
    v.certificate = std::move(cert);
    return v;
  }
  const auto cycle = find_cycle(pl);
  if (!cycle) {
    throw EquivalenceViolation("second perfect matching exists but no alternating cycle was found",
                               format_graph(pl.graph()));
  }
  v.value = Truth::False;
  MatchingCertificate cert;
  for (const Edge& e : rotate_along(pl, *cycle)) cert.edges.emplace_back(pl.graph().name(e.u), pl.graph().name(e.v));
  v.certificate = std::move(cert);
  return v;
}

}  // namespace cmg

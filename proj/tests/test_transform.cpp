#include <doctest.h>

#include <set>

#include "cmg/criteria.hpp"
#include "cmg/enumerate.hpp"
#include "cmg/errors.hpp"
#include "cmg/graph_io.hpp"
#include "cmg/transform.hpp"
#include "oracles.hpp"

using namespace cmg;

namespace {

PairedLabeling declared(const std::string& text) {
  const GraphFile f = parse_graph_text(text);
  return PairedLabeling::from_names(f.graph, f.pairs);
}

std::set<std::set<std::string>> edge_set(const Graph& g) {
  std::set<std::set<std::string>> out;
  for (const auto& [a, b] : g.named_edges()) out.insert({a, b});
  return out;
}

std::set<std::set<std::string>> edges(std::initializer_list<std::pair<const char*, const char*>> list) {
  std::set<std::set<std::string>> out;
  for (const auto& [a, b] : list) out.insert({a, b});
  return out;
}

const char* kExample31 = "pairs 3\nedge x1 y2\nedge x1 y3\nedge x2 y3\n";
const char* kC4 = "pair x1 y1\npair x2 y2\nedge x1 y2\nedge x2 y1\n";

BGraftBlock block(const std::string& text, std::vector<std::string> xs, std::vector<std::string> ys) {
  return {parse_graph_text(text).graph, std::move(xs), std::move(ys)};
}

}  // namespace

TEST_CASE("O_i on Example 3.1") {
  const PairedLabeling pl = declared(kExample31);
  CHECK(o_operator(pl, 0) == pl.graph());
  CHECK(edge_set(o_operator(pl, 1)) ==
        edges({{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}, {"x1", "x2"}, {"x1", "y3"}, {"x2", "y3"}}));
  CHECK(edge_set(o_operator(pl, 2)) ==
        edges({{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}, {"x1", "y2"}, {"x1", "x3"}, {"x2", "x3"}}));
  CHECK_THROWS_AS(o_operator(pl, 3), InputError);
}

TEST_CASE("O_T examples") {
  const PairedLabeling pl = declared(kExample31);
  const std::vector<std::size_t> t23{1, 2};
  CHECK(edge_set(o_set(pl, t23)) ==
        edges({{"x1", "y1"}, {"x1", "x2"}, {"x1", "x3"}, {"x2", "y2"}, {"x2", "x3"}, {"x3", "y3"}}));
  CHECK(o_set(pl, std::vector<std::size_t>{}) == pl.graph());
  const std::vector<std::size_t> t12{0, 1};
  CHECK(edge_set(o_set(declared(kC4), t12)) == edges({{"x1", "y1"}, {"x2", "y2"}, {"x1", "x2"}}));
}

TEST_CASE("restricted O_[n] examples") {
  CHECK(edge_set(restricted_o_full(declared(kExample31))) == edges({{"x1", "x2"}, {"x1", "x3"}, {"x2", "x3"}}));
  const Graph p4 = restricted_o_full(declared("pairs 4\n"));
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edge_count() == 0);
  CHECK(edge_set(restricted_o_full(declared(kC4))) == edges({{"x1", "x2"}}));
}

TEST_CASE("O_T is order independent, idempotent and stays in class") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const PairedLabeling pl = oracle::identity_labeling(oracle::random_class_graph(n, 0.35, rng));
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() & 1U) t.push_back(i);
    }
    const Graph once = o_set(pl, t);
    std::vector<std::size_t> shuffled = t;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(o_set(pl, shuffled) == once);
    // Step-by-step composition through relabelled intermediate graphs.
    PairedLabeling step = pl;
    for (std::size_t i : shuffled) step = step.with_graph(o_operator(step, i));
    CHECK(step.graph() == once);
    for (std::size_t i = 0; i < n; ++i) {
      const Graph g1 = o_operator(pl, i);
      CHECK(o_operator(pl.with_graph(g1), i) == g1);
    }
    CHECK(classify(once).in_class);
    CHECK(labeling_problem(once, pl.pairs()) == std::nullopt);
  }
}

TEST_CASE("b_graft reproduces Example 5.1") {
  BGraftSpec spec;
  spec.h0 = parse_graph_text("edge 1 2\nedge 2 3\nedge 1 3\n").graph;
  spec.blocks.push_back(block("edge x1 y1\n", {"x1"}, {"y1"}));
  spec.blocks.push_back(block("edge x2 y2\nedge x2 y3\nedge x3 y3\n", {"x2", "x3"}, {"y2", "y3"}));
  spec.blocks.push_back(block("edge x4 y4\n", {"x4"}, {"y4"}));
  const GraftResult r = b_graft(spec);
  CHECK(edge_set(r.graph) == edges({{"x1", "y1"}, {"x2", "y2"}, {"x2", "y3"}, {"x3", "y3"}, {"x4", "y4"}, {"x1", "x2"},
                                    {"x1", "x3"}, {"x2", "x4"}, {"x3", "x4"}, {"x1", "x4"}}));
  CHECK(r.labeling.named_pairs() == std::vector<NamedEdge>{{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}, {"x4", "y4"}});
  CHECK(r.graph.is_vertex_cover(r.labeling.xs()));
  CHECK(r.graph.is_independent(r.labeling.ys()));
}

TEST_CASE("b_graft small cases and errors") {
  BGraftSpec single;
  single.h0 = parse_graph_text("vertex 1\n").graph;
  single.blocks.push_back(block("edge a b\nedge a d\nedge c d\n", {"a", "c"}, {"b", "d"}));
  CHECK(b_graft(single).graph == single.blocks[0].graph);

  BGraftSpec two;
  two.h0 = parse_graph_text("edge 1 2\n").graph;
  two.blocks.push_back(block("edge x1 y1\n", {"x1"}, {"y1"}));
  two.blocks.push_back(block("edge x2 y2\n", {"x2"}, {"y2"}));
  const GraftResult r = b_graft(two);
  CHECK(edge_set(r.graph) == edges({{"x1", "y1"}, {"x2", "y2"}, {"x1", "x2"}}));
  CHECK(is_cohen_macaulay(r.labeling));

  BGraftSpec wrong_count = two;
  wrong_count.blocks.pop_back();
  CHECK_THROWS_AS(b_graft(wrong_count), SpecError);

  BGraftSpec not_bipartite = two;
  not_bipartite.blocks[0] = block("edge x1 y1\nedge x1 z1\n", {"x1"}, {"y1", "z1"});
  CHECK_THROWS_AS(b_graft(not_bipartite), SpecError);

  BGraftSpec clash = two;
  clash.blocks[1] = block("edge x1 y1\n", {"x1"}, {"y1"});
  CHECK_THROWS_AS(b_graft(clash), SpecError);

  BGraftSpec unmatched = single;
  unmatched.blocks[0] = block("edge a b\nedge a d\nedge c b\nedge e f\n", {"a", "c", "e"}, {"b", "d", "f"});
  CHECK_NOTHROW(b_graft(unmatched));
  unmatched.blocks[0] = block("edge a b\nedge a d\nedge c b\nedge e b\nedge e f\n", {"a", "c", "e"}, {"b", "d", "f"});
  CHECK_NOTHROW(b_graft(unmatched));
  unmatched.blocks[0] = block("edge a b\nedge c b\nedge a d\nedge a f\nedge e b\n", {"a", "c", "e"}, {"b", "d", "f"});
  CHECK_THROWS_AS(b_graft(unmatched), StructureError);
}

namespace {

/// Random bipartite block on xK.., yK.. with the pair edges present.
BGraftBlock random_block(std::size_t first, std::size_t size, std::mt19937_64& rng) {
  std::vector<std::string> xs, ys;
  std::vector<NamedEdge> es;
  for (std::size_t i = 0; i < size; ++i) {
    xs.push_back("x" + std::to_string(first + i));
    ys.push_back("y" + std::to_string(first + i));
  }
  for (std::size_t i = 0; i < size; ++i) {
    es.emplace_back(xs[i], ys[i]);
    for (std::size_t j = 0; j < size; ++j) {
      if (i != j && rng() % 3 == 0) es.emplace_back(xs[i], ys[j]);
    }
  }
  std::vector<std::string> names = xs;
  names.insert(names.end(), ys.begin(), ys.end());
  return {Graph(names, es), xs, ys};
}

}  // namespace

TEST_CASE("grafted graph is CM or unmixed exactly when every block is") {
  std::mt19937_64 rng(33);
  int cm_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    BGraftSpec spec;
    const std::size_t p = 1 + trial % 3;
    std::vector<NamedEdge> h0_edges;
    std::vector<std::string> h0_names;
    for (std::size_t i = 1; i <= p; ++i) h0_names.push_back(std::to_string(i));
    for (std::size_t i = 1; i <= p; ++i) {
      for (std::size_t j = i + 1; j <= p; ++j) {
        if (rng() & 1U) h0_edges.emplace_back(std::to_string(i), std::to_string(j));
      }
    }
    spec.h0 = Graph(h0_names, h0_edges);
    bool all_cm = true;
    bool all_unmixed = true;
    std::size_t next = 1;
    for (std::size_t b = 0; b < p; ++b) {
      const std::size_t size = 1 + rng() % 3;
      spec.blocks.push_back(random_block(next, size, rng));
      next += size;
      const Graph& bg = spec.blocks.back().graph;
      all_unmixed = all_unmixed && oracle::unmixed(bg);
      // Unmixed with a unique perfect matching characterizes CM here.
      all_cm = all_cm && oracle::unmixed(bg) && oracle::count_perfect_matchings(bg) == 1;
    }
    const GraftResult r = b_graft(spec);
    CHECK(oracle::unmixed(r.graph) == all_unmixed);
    const bool cm = oracle::unmixed(r.graph) && oracle::count_perfect_matchings(r.graph) == 1;
    CHECK(cm == is_cohen_macaulay(r.labeling));
    CHECK(cm == all_cm);
    cm_seen += cm;
  }
  CHECK(cm_seen > 10);
}

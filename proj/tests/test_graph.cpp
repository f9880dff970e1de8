#include "blink/error.hpp"
#include "blink/exact.hpp"
#include "blink/graph.hpp"
#include "blink/graph_io.hpp"
#include "blink/transform.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace blink;

TEST_CASE("merge_parallel") {
  CHECK(merge_parallel(0.5, 0.5) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(merge_parallel(1.0, 0.3) == 1.0);
  CHECK(merge_parallel(merge_parallel(0.3, 0.3), 0.3) == doctest::Approx(0.657).epsilon(1e-15));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = d(rng), b = d(rng), c = d(rng);
    CHECK(std::abs(merge_parallel(a, b) - merge_parallel(b, a)) <= 1e-15);
    CHECK(std::abs(merge_parallel(merge_parallel(a, b), c) - merge_parallel(a, merge_parallel(b, c))) <= 1e-15);
  }
}

TEST_CASE("builder merges parallel edges and rejects bad input") {
  GraphBuilder b;
  b.add_edge("A", "B", 0.5);
  b.add_edge("A", "B", 0.5);
  CHECK_THROWS_AS(b.add_edge("A", "A", 0.5), Error);
  CHECK_THROWS_AS(b.add_edge("A", "C", 0.0), Error);
  CHECK_THROWS_AS(b.add_edge("A", "C", 1.5), Error);
  const WeightedGraph g = std::move(b).build();
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edge(0).weight == doctest::Approx(0.75));
  CHECK(g.name(*g.find("B")) == "B");
  CHECK(g.in_degree(*g.find("B")) == 1);
}

TEST_CASE("edge file parsing") {
  std::istringstream in("# comment\nA\tB\t0.5\nB\tC\n\nC\tA\tinf\n");
  const auto lines = read_edge_lines(in, "mem");
  REQUIRE(lines.size() == 3);
  CHECK(lines[1].value == 1.0);
  CHECK(std::isinf(lines[2].value));

  std::istringstream bad("A\tB\t0.5\nA\tB\tzero\n");
  try {
    read_edge_lines(bad, "mem");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("mem:2") != std::string::npos);
  }
  std::istringstream neg("A\tB\t-1\n");
  CHECK_THROWS_AS(read_edge_lines(neg, "mem"), Error);

  std::istringstream hyper("0.5\tA\tB\tC\n");
  const auto recs = read_hyperedge_lines(hyper, "mem");
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].members.size() == 3);
  CHECK(recs[0].weight == 0.5);
}

TEST_CASE("undirected lines add both directions") {
  const WeightedGraph g = graph_from_lines({{"A", "B", 0.4}}, {{"A", 0.9}}, true);
  CHECK(g.edge_count() == 2);
  CHECK(g.find_edge(*g.find("B"), *g.find("A")).has_value());
  CHECK(g.node_weight(*g.find("A")) == 0.9);
}

TEST_CASE("series reduction") {
  GraphBuilder b;
  b.add_edge("A", "Y", 0.5);
  b.add_edge("Y", "B", 0.5);
  WeightedGraph g = std::move(b).build();
  const NodeId keep[] = {*g.find("A"), *g.find("B")};
  const WeightedGraph r = series_reduce(g, keep);
  REQUIRE(r.edge_count() == 1);
  CHECK(r.edge(0).weight == doctest::Approx(0.25));

  GraphBuilder b2;
  b2.add_node("Y", 0.8);
  b2.add_edge("A", "Y", 0.5);
  b2.add_edge("Y", "B", 0.5);
  WeightedGraph g2 = std::move(b2).build();
  const NodeId keep2[] = {*g2.find("A"), *g2.find("B")};
  const WeightedGraph r2 = series_reduce(g2, keep2);
  REQUIRE(r2.edge_count() == 1);
  CHECK(r2.edge(0).weight == doctest::Approx(0.2));
  CHECK(exact_reachability(r2, *r2.find("A"), *r2.find("B")) ==
        doctest::Approx(exact_reachability(g2, *g2.find("A"), *g2.find("B"))).epsilon(1e-12));

  // No eliminable node: unchanged.
  const WeightedGraph tri = graph_from_lines({{"A", "B", 0.5}, {"B", "C", 0.5}, {"A", "C", 0.5}});
  const NodeId all[] = {0, 1, 2};
  CHECK(series_reduce(tri, all).edge_count() == 3);
}

TEST_CASE("node splitting") {
  GraphBuilder b;
  b.add_node("C", 0.5);
  b.add_edge("A", "C", 0.9);
  b.add_edge("C", "B", 0.9);
  const WeightedGraph g = std::move(b).build();
  const SplitResult s = split_node_weights(g);
  CHECK(s.graph.edge_count() == 3);
  const NodeId a = *g.find("A"), bb = *g.find("B");
  CHECK(exact_reachability(s.graph, s.out_node[a], s.in_node[bb]) == doctest::Approx(0.405).epsilon(1e-12));
  CHECK(exact_reachability(g, a, bb) == doctest::Approx(0.405).epsilon(1e-12));

  const WeightedGraph plain = graph_from_lines({{"A", "B", 0.5}, {"B", "C", 0.5}});
  CHECK(split_node_weights(plain).graph.edge_count() == 2);

  // A weighted source without in-edges stays whole.
  GraphBuilder b3;
  b3.add_node("S", 0.3);
  b3.add_edge("S", "T", 0.5);
  const WeightedGraph g3 = std::move(b3).build();
  const SplitResult s3 = split_node_weights(g3);
  CHECK(s3.graph.node_count() == 2);
  CHECK(exact_reachability(s3.graph, s3.out_node[0], s3.in_node[1]) == doctest::Approx(0.5));
}

TEST_CASE("hyperedge expansion") {
  const std::vector<HyperedgeRecord> one{{{"A", "B"}, 0.5}};
  const WeightedGraph g1 = expand_hyperedges(one);
  CHECK(exact_reachability(g1, *g1.find("A"), *g1.find("B")) == doctest::Approx(0.5).epsilon(1e-12));

  const std::vector<HyperedgeRecord> two{{{"A", "B"}, 0.3}, {{"B", "A"}, 0.3}};
  const WeightedGraph g2 = expand_hyperedges(two);
  CHECK(exact_reachability(g2, *g2.find("A"), *g2.find("B")) == doctest::Approx(1 - 0.7 * 0.7).epsilon(1e-12));

  const std::vector<HyperedgeRecord> three{{{"A", "B", "C"}, 0.5}};
  const WeightedGraph g3 = expand_hyperedges(three);
  const NodeId h = *g3.find("~h0");
  CHECK(g3.in_degree(h) == 3);
  CHECK(g3.out_degree(h) == 3);
  for (EdgeId e = g3.out_begin(h); e < g3.out_end(h); ++e) CHECK(g3.edge(e).weight == 1.0);

  const std::vector<HyperedgeRecord> degenerate{{{"A", "A"}, 0.5}};
  CHECK_THROWS_AS(expand_hyperedges(degenerate), Error);
}

TEST_CASE("transformations preserve reachability on random graphs") {
  std::mt19937_64 rng(11);
  test::RandomGraphSpec spec;
  spec.node_weight_chance = 0.4;
  for (int trial = 0; trial < 100; ++trial) {
    const WeightedGraph g = test::random_graph(rng, spec);
    const SplitResult s = split_node_weights(g);
    for (NodeId a = 0; a < 2; ++a) {
      const NodeId keep[] = {a, static_cast<NodeId>((a + 1) % g.node_count())};
      const WeightedGraph r = series_reduce(g, keep);
      for (NodeId b = 0; b < g.node_count(); ++b) {
        if (a == b) continue;
        const double ref = test::enumerate_reachability(g, a, b);
        CHECK(std::abs(exact_reachability(s.graph, s.out_node[a], s.in_node[b]) - ref) <= 1e-12);
        if (b == keep[1]) CHECK(std::abs(exact_reachability(r, *r.find(g.name(a)), *r.find(g.name(b))) - ref) <= 1e-12);
      }
    }
  }
}

TEST_CASE("hyperedge expansion matches direct pairwise edges") {
  // A 2-member hyperedge of weight w is an undirected edge of weight w.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> wd(0.05, 0.95);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<HyperedgeRecord> recs;
    GraphBuilder b;
    for (int k = 0; k < 3; ++k) {
      const int x = static_cast<int>(rng() % 4), y = static_cast<int>((x + 1 + rng() % 3) % 4);
      const double w = wd(rng);
      recs.push_back({{"v" + std::to_string(x), "v" + std::to_string(y)}, w});
      b.add_node("~h" + std::to_string(k), w);
      b.add_undirected_edge(b.intern("v" + std::to_string(x)), b.intern("~h" + std::to_string(k)), 1.0);
      b.add_undirected_edge(b.intern("~h" + std::to_string(k)), b.intern("v" + std::to_string(y)), 1.0);
    }
    const WeightedGraph h = expand_hyperedges(recs);
    const WeightedGraph d = std::move(b).build();
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) {
        if (x == y) continue;
        const auto hx = h.find("v" + std::to_string(x)), hy = h.find("v" + std::to_string(y));
        if (!hx || !hy) continue;
        const double p = exact_reachability(h, *hx, *hy);
        CHECK(std::abs(p - test::enumerate_reachability(d, *d.find(h.name(*hx)), *d.find(h.name(*hy)))) <= 1e-12);
      }
  }
}

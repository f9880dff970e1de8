#include "blink/baselines.hpp"
#include "blink/error.hpp"
#include "blink/graph_io.hpp"
#include "blink/synthetic.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace blink;

TEST_CASE("personalized PageRank") {
  const WeightedGraph cyc = graph_from_lines({{"A", "B", 0.5}, {"B", "A", 0.5}});
  const double alpha = 0.5;
  CHECK(*ppr_scores(cyc, 0, alpha).score_of(1) == doctest::Approx((1 - alpha) / (2 - alpha)).epsilon(1e-10));
  const WeightedGraph chain = graph_from_lines({{"A", "B", 0.5}, {"B", "C", 0.5}});
  CHECK(*ppr_scores(chain, 0, 0.999999).score_of(2) < 1e-6);
  // C has no out-edges and restarts to A.
  const auto pi = ppr_vector(chain, 0, 0.2);
  CHECK(pi[1] == doctest::Approx(0.8 * pi[0]).epsilon(1e-9));
  CHECK(pi[2] == doctest::Approx(0.8 * pi[1]).epsilon(1e-9));

  std::mt19937_64 rng(161);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedGraph g = test::random_graph(rng);
    const auto v = ppr_vector(g, 0, 0.3);
    double total = 0.0;
    for (double x : v) total += x;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("Katz") {
  const WeightedGraph g = graph_from_lines({{"A", "B", 0.6}});
  CHECK(*katz_scores(g, 0, 0.1).score_of(1) == doctest::Approx(0.06).epsilon(1e-12));
  GraphBuilder b;
  b.add_node("C", 0.7);
  b.add_edge("A", "C", 0.5);
  b.add_edge("C", "B", 0.5);
  const WeightedGraph h = std::move(b).build();
  CHECK(*katz_scores(h, *h.find("A"), 0.2).score_of(*h.find("B")) ==
        doctest::Approx(0.04 * 0.25 * 0.7).epsilon(1e-12));

  const WeightedGraph two = graph_from_lines({{"A", "B", 1.0}, {"B", "A", 1.0}});
  CHECK(katz_spectral_radius(two) == doctest::Approx(1.0).epsilon(1e-9));
  try {
    katz_scores(two, 0, 1.01);
    FAIL("expected divergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDivergent);
  }
  // On a 2-cycle with weights 1 the walk sum is beta / (1 - beta^2).
  CHECK(*katz_scores(two, 0, 0.5).score_of(1) == doctest::Approx(0.5 / 0.75).epsilon(1e-10));
}

TEST_CASE("Katz spectral radius on constructed spectra") {
  // Directed cycle of length k with edge weight c has rho = c; a DAG has rho = 0.
  for (int k : {2, 3, 5, 8}) {
    for (double c : {0.2, 0.5, 0.9, 1.0}) {
      GraphBuilder b;
      for (int i = 0; i < k; ++i) b.add_edge("v" + std::to_string(i), "v" + std::to_string((i + 1) % k), c);
      const WeightedGraph g = std::move(b).build();
      CHECK(std::abs(katz_spectral_radius(g) - c) <= 1e-9);
    }
  }
  // Complete digraph on n nodes with weight c: rho = (n - 1) c.
  GraphBuilder b;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) b.add_edge("v" + std::to_string(i), "v" + std::to_string(j), 0.3);
  CHECK(std::abs(katz_spectral_radius(std::move(b).build()) - 0.9) <= 1e-9);
  const WeightedGraph dag = graph_from_lines({{"A", "B", 0.5}, {"B", "C", 0.5}, {"A", "C", 0.5}});
  CHECK(katz_spectral_radius(dag) == 0.0);
  CHECK_NOTHROW(katz_scores(dag, 0, 1000.0));
}

TEST_CASE("Adamic/Adar") {
  // One common neighbor C with in- and out-degree 3.
  const WeightedGraph g = graph_from_lines({{"A", "C", 0.5},
                                            {"X", "C", 0.5},
                                            {"Y", "C", 0.5},
                                            {"C", "B", 0.5},
                                            {"C", "P", 0.5},
                                            {"C", "Q", 0.5}});
  CHECK(*adamic_adar(g, *g.find("A")).score_of(*g.find("B")) ==
        doctest::Approx(1 / (2 * std::log(3.0))).epsilon(1e-12));
  const WeightedGraph none = graph_from_lines({{"A", "B", 0.5}});
  CHECK(adamic_adar(none, 0).size() == 0);

  std::mt19937_64 rng(171);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightedGraph r = test::random_graph(rng);
    const ScoreTable t = adamic_adar(r, 0);
    for (NodeId b = 1; b < r.node_count(); ++b) {
      double expected = 0.0;
      for (NodeId c = 0; c < r.node_count(); ++c) {
        if (!r.find_edge(0, c) || !r.find_edge(c, b) || c == b || c == 0) continue;
        expected += 1.0 / (std::log(std::max<double>(r.in_degree(c), 2)) + std::log(std::max<double>(r.out_degree(c), 2)));
      }
      CHECK(t.score_of(b).value_or(0.0) == expected);
    }
  }
}

TEST_CASE("effective conductance") {
  const WeightedGraph one = graph_from_lines({{"A", "B", 0.3}}, {}, true);
  CHECK(effective_conductance(one, 0, 1) == doctest::Approx(0.3).epsilon(1e-10));
  for (double w : {0.1, 0.5, 0.9}) {
    const WeightedGraph l = two_path_graph(w), r = crossed_two_path_graph(w);
    CHECK(std::abs(effective_conductance(l, *l.find("A"), *l.find("B")) - w) <= 1e-10);
    CHECK(std::abs(effective_conductance(r, *r.find("A"), *r.find("B")) - w) <= 1e-10);
  }
  const WeightedGraph apart = graph_from_lines({{"A", "B", 0.5}, {"C", "D", 0.5}});
  CHECK_THROWS_AS(effective_conductance(apart, 0, *apart.find("D")), Error);
  // Two resistors in series: 1 / (1/0.5 + 1/0.25).
  const WeightedGraph series = graph_from_lines({{"A", "B", 0.5}, {"B", "C", 0.25}}, {}, true);
  CHECK(effective_conductance(series, 0, 2) == doctest::Approx(1.0 / 6).epsilon(1e-10));
}

TEST_CASE("weighted shortest path") {
  const WeightedGraph one = graph_from_lines({{"A", "B", 0.4}});
  CHECK(weighted_shortest_path(one, 0, 1) == doctest::Approx(0.4));
  const WeightedGraph l = two_path_graph(0.4);
  CHECK(weighted_shortest_path(l, *l.find("A"), *l.find("B")) == doctest::Approx(0.2));
  CHECK(weighted_shortest_path(l, *l.find("A"), *l.find("B"), EdgeLength::kWeight) == doctest::Approx(1 / 0.8));
  const WeightedGraph routes = graph_from_lines(
      {{"A", "X", 0.5}, {"X", "B", 0.5}, {"A", "P", 0.5}, {"P", "Q", 0.5}, {"Q", "B", 0.5}});
  CHECK(weighted_shortest_path(routes, *routes.find("A"), *routes.find("B")) == doctest::Approx(0.25));
  CHECK_THROWS_AS(weighted_shortest_path(one, 1, 0), Error);
}

TEST_CASE("symmetric combination") {
  CHECK(symmetric_combine(0.2, 0.5, SymmetricRule::kMax) == 0.5);
  CHECK(symmetric_combine(0.2, 0.5, SymmetricRule::kMin) == 0.2);
  CHECK(symmetric_combine(0.2, 0.5, SymmetricRule::kSum) == doctest::Approx(0.7));
  CHECK(symmetric_combine(0.5, 0.5, SymmetricRule::kProductB) == doctest::Approx(-std::log(0.75)));
}

TEST_CASE("score table tie-break") {
  // B and C tie on score; C has the larger in-degree.
  const WeightedGraph g = graph_from_lines({{"A", "B", 0.5}, {"A", "C", 0.5}, {"D", "C", 0.5}});
  const ScoreTable t = make_score_table(g, 0, {{*g.find("B"), 1.0}, {*g.find("C"), 1.0}, {*g.find("D"), 2.0}});
  CHECK(g.name(t.entries[0].node) == "D");
  CHECK(g.name(t.entries[1].node) == "C");
  CHECK(g.name(t.entries[2].node) == "B");
}

#include "blink/exact.hpp"
#include "blink/monte_carlo.hpp"
#include "blink/synthetic.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace blink;

TEST_CASE("draws are deterministic and uniform") {
  CHECK(blink_draw(1, 2, 3) == blink_draw(1, 2, 3));
  CHECK(blink_draw(1, 2, 3) != blink_draw(1, 2, 4));
  double sum = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = blink_draw(9, i, 5);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
  CHECK(edge_key(1, 2) != node_key(1));
}

TEST_CASE("reachable sets") {
  const WeightedGraph full = graph_from_lines({{"A", "B", 1.0}, {"B", "C", 1.0}, {"D", "A", 1.0}});
  CHECK(sample_reachable_set(full, *full.find("A"), 3).size() == 3);

  const WeightedGraph faint = graph_from_lines({{"A", "B", 1e-9}});
  std::size_t only_a = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) only_a += sample_reachable_set(faint, 0, 1, i).size() == 1;
  CHECK(only_a == 1000);

  GraphBuilder b;
  b.add_node("C", 0.5);
  b.add_edge("A", "C", 1.0);
  b.add_edge("C", "B", 1.0);
  const WeightedGraph g = std::move(b).build();
  const McEstimate e = mc_blink_estimate(g, *g.find("A"), *g.find("B"), 100000, 3);
  CHECK(std::abs(e.mean - 0.5) <= 4 * e.std_error);
  // The target itself is reached without its own draw.
  CHECK(mc_blink_estimate(g, *g.find("A"), *g.find("C"), 1000, 3).mean == 1.0);
}

TEST_CASE("estimates on the crossed two-path graph") {
  const WeightedGraph g = crossed_two_path_graph(0.5);
  const McEstimate e = mc_blink_estimate(g, *g.find("A"), *g.find("B"), 100000, 7);
  CHECK(std::abs(e.mean - 0.5) <= 4 * e.std_error);
  CHECK(e.std_error == doctest::Approx(std::sqrt(e.mean * (1 - e.mean) / 100000)));
  const McEstimate once = mc_blink_estimate(g, *g.find("A"), *g.find("B"), 1, 7);
  CHECK((once.mean == 0.0 || once.mean == 1.0));
  const McEstimate again = mc_blink_estimate(g, *g.find("A"), *g.find("B"), 100000, 7);
  CHECK(again.hits == e.hits);
  CHECK(mc_blink_estimate(g, *g.find("A"), *g.find("B"), 100000, 7, 4).hits == e.hits);
}

TEST_CASE("Monte Carlo agrees with the exact engine within 4 sigma") {
  std::mt19937_64 rng(71);
  test::RandomGraphSpec spec;
  spec.node_weight_chance = 0.3;
  int within = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const WeightedGraph g = test::random_graph(rng, spec);
    const NodeId b = static_cast<NodeId>(g.node_count() - 1);
    const double exact = exact_reachability(g, 0, b);
    const McEstimate e = mc_blink_estimate(g, 0, b, 100000, 1000 + trial);
    within += std::abs(e.mean - exact) <= 4 * e.std_error + 1e-12;
  }
  CHECK(within >= 95);
}

TEST_CASE("expected reachable distance") {
  const WeightedGraph one = graph_from_lines({{"A", "B", 1.0}});
  CHECK(mc_erd(one, 0, 1, 100, 1) == 1.0);
  const WeightedGraph g = graph_from_lines({{"A", "B", 0.5}, {"A", "C", 1.0}, {"C", "B", 1.0}});
  CHECK(mc_erd(g, *g.find("A"), *g.find("B"), 100000, 1) == doctest::Approx(1.5).epsilon(0.01));
  const WeightedGraph apart = graph_from_lines({{"A", "B", 0.5}, {"C", "D", 0.5}});
  CHECK(std::isinf(mc_erd(apart, *apart.find("A"), *apart.find("D"), 100, 1)));

  // A detour raises the mean: instances without the direct edge now connect at distance 2.
  const WeightedGraph before = graph_from_lines({{"A", "B", 0.5}});
  const WeightedGraph after = graph_from_lines({{"A", "B", 0.5}, {"A", "C", 1.0}, {"C", "B", 1.0}});
  CHECK(mc_erd(after, *after.find("A"), *after.find("B"), 10000, 1) >
        mc_erd(before, *before.find("A"), *before.find("B"), 10000, 1));
}

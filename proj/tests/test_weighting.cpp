#include "blink/error.hpp"
#include "blink/graph.hpp"
#include "blink/weighting.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace blink;

TEST_CASE("scheme weights") {
  CHECK(scheme_weight(SchemeKind::kExponential, 0.5, 1.0) == 0.5);
  CHECK(scheme_weight(SchemeKind::kExponential, 0.5, 2.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(scheme_weight(SchemeKind::kExponential, 0.5, 2.0) ==
        doctest::Approx(merge_parallel(0.5, 0.5)).epsilon(1e-15));
  CHECK(scheme_weight(SchemeKind::kLinear, 0.3, 2.0) == doctest::Approx(0.6));
  CHECK(scheme_weight(SchemeKind::kDirect, 0.3, 0.8) == 0.8);
  CHECK(scheme_weight(SchemeKind::kLinear, 0.3, RawGraph::kInfinite) == 1.0);
  CHECK_THROWS_AS(scheme_weight(SchemeKind::kLinear, 0.6, 2.0), Error);
}

TEST_CASE("f additivity matches parallel merging") {
  std::mt19937_64 rng(181);
  std::uniform_real_distribution<double> b(0.01, 0.99), f(0.05, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const double bb = b(rng), f1 = f(rng), f2 = f(rng);
    const double joint = scheme_weight(SchemeKind::kExponential, bb, f1 + f2);
    const double merged = merge_parallel(scheme_weight(SchemeKind::kExponential, bb, f1),
                                         scheme_weight(SchemeKind::kExponential, bb, f2));
    CHECK(std::abs(joint - merged) <= 1e-15);
  }
}

TEST_CASE("exponential weights approach linear ones for small b") {
  // The gap is about |1 - f| b / 2, inside f b once f >= 1/2 and inside b / 2 below.
  for (double bb : {0.01, 0.005, 0.001, 1e-4})
    for (double f : {0.05, 0.1, 0.3, 0.5, 1.0, 2.0, 5.0, 20.0}) {
      CAPTURE(bb);
      CAPTURE(f);
      const double e = scheme_weight(SchemeKind::kExponential, bb, f);
      const double l = scheme_weight(SchemeKind::kLinear, bb, f);
      CHECK(std::abs(e - l) / l <= std::max(f, 0.5) * bb);
    }
}

TEST_CASE("applying weights") {
  const RawGraph raw = raw_from_lines({{"A", "B", 1.0}, {"B", "C", 1.0}, {"A", "B", 1.0}}, {{"B", 1.0}});
  const WeightedGraph g = apply_weights(raw, WeightScheme{SchemeKind::kExponential, 0.5, 0.3});
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(*g.find_edge(*g.find("A"), *g.find("B"))).weight == doctest::Approx(0.75));
  CHECK(g.edge(*g.find_edge(*g.find("B"), *g.find("C"))).weight == doctest::Approx(0.5));
  CHECK(g.node_weight(*g.find("B")) == doctest::Approx(0.3));
  CHECK(g.name(0) == raw.name(0));

  const RawGraph h = raw_from_hyperedges({{{"A", "B", "C"}, 1.0}});
  const WeightedGraph hg = apply_weights(h, WeightScheme{SchemeKind::kExponential, 0.4, 0.7});
  const NodeId hub = *hg.find("~h0");
  CHECK(hg.node_weight(hub) == doctest::Approx(0.4));
  CHECK(hg.node_weight(*hg.find("A")) == doctest::Approx(0.7));
  for (EdgeId e = hg.out_begin(hub); e < hg.out_end(hub); ++e) CHECK(hg.edge(e).weight == 1.0);
}

TEST_CASE("author/paper knowledge") {
  // Author X writes papers with gamma^2 = 25 out-links in total.
  RawGraph raw;
  std::vector<char> is_paper;
  const double gamma = 5.0;
  const NodeId x = raw.intern("X");
  for (int p = 0; p < 25; ++p) {
    const NodeId paper = raw.intern("~p" + std::to_string(p));
    const NodeId co = raw.intern("Y" + std::to_string(p % 3));
    for (NodeId m : {x, co}) {
      raw.add_edge(m, paper, 1.0);
      raw.add_edge(paper, m, 1.0);
    }
  }
  is_paper.assign(raw.node_count(), 0);
  for (NodeId v = 0; v < raw.node_count(); ++v) is_paper[v] = raw.name(v)[0] == '~';
  const DomainKnowledge k = arxiv_knowledge(raw, is_paper, gamma);
  for (std::size_t i = 0; i < raw.edges().size(); ++i)
    if (raw.edges()[i].src == x) CHECK(k.edge_f[i] == doctest::Approx(0.5));
  CHECK(std::isinf(k.node_f[*raw.find("~p0")]));
  // X has 3 coauthors, fewer than gamma.
  CHECK(k.node_f[x] == 1.0);
}

TEST_CASE("citation knowledge") {
  RawGraph raw;
  const NodeId x = raw.intern("X"), y = raw.intern("Y"), z = raw.intern("Z");
  raw.add_edge(x, y, 1.0);
  raw.add_edge(y, x, 1.0);
  raw.add_edge(x, z, 1.0);
  const DomainKnowledge k = wiki_knowledge(raw, 5.0);
  CHECK(k.edge_f[0] == 2.0);
  CHECK(k.edge_f[2] == 1.0);
  CHECK(k.node_f[z] == doctest::Approx(1.0 / (2 * std::log(2.0))));

  // i = gamma^2 and d_in(Y) = gamma give delta / 2.
  RawGraph r2;
  const double gamma = 2.0;
  const NodeId s = r2.intern("S"), t = r2.intern("T");
  for (int i = 0; i < 3; ++i) r2.add_edge(s, r2.intern("u" + std::to_string(i)), 1.0);
  r2.add_edge(s, t, 1.0);
  r2.add_edge(r2.intern("w"), t, 1.0);
  const DomainKnowledge k2 = wiki_knowledge(r2, gamma);
  CHECK(k2.edge_f[3] == doctest::Approx(0.5));
}

TEST_CASE("grid search") {
  const auto grid = expand_grid({{"b1", {0.3, 0.1}}, {"b2", {0.5}}});
  REQUIRE(grid.size() == 2);
  CHECK(grid[0].at("b1") == 0.1);
  const GridResult single = grid_search({{{"b1", 0.4}}}, [](const ParamPoint&) { return 0.0; });
  CHECK(single.best.at("b1") == 0.4);
  const GridResult flat = grid_search(grid, [](const ParamPoint&) { return 1.0; });
  CHECK(flat.best.at("b1") == 0.1);
  const auto fine = expand_grid({{"b1", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}}});
  auto metric = [](const ParamPoint& p) { return -std::abs(p.at("b1") - 0.6); };
  const GridResult r1 = grid_search(fine, metric, 1);
  const GridResult r4 = grid_search(fine, metric, 4);
  CHECK(r1.best.at("b1") == 0.6);
  CHECK(r4.best == r1.best);
  CHECK(r1.evaluated.size() == 9);
}

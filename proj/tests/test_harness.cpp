#include "blink/config.hpp"
#include "blink/error.hpp"
#include "blink/harness.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace blink;

TEST_CASE("top-k precision") {
  const std::set<int> truth{1, 2, 3, 4};
  CHECK(topk_precision(std::vector<int>{1, 2, 3, 4, 5}, truth) == 1.0);
  CHECK(topk_precision(std::vector<int>{5, 6, 7, 8, 1}, truth) == 0.0);
  CHECK(topk_precision(std::vector<int>{1, 5, 2, 6}, truth) == 0.5);
}

TEST_CASE("average precision") {
  CHECK(mean_average_precision({{{1, 2, 3}, {1}}}) == 1.0);
  CHECK(mean_average_precision({{{2, 1, 3}, {1}}}) == 0.5);
  CHECK(mean_average_precision({{{1, 2, 3}, {1, 3}}}) == doctest::Approx((1 + 2.0 / 3) / 2));
  const RankedTask perfect{{1, 2, 3, 4}, {1, 2}};
  const RankedTask reversed{{4, 3, 2, 1}, {1, 2}};
  CHECK(mean_average_precision({reversed}) < mean_average_precision({perfect}));
}

TEST_CASE("curves") {
  const auto perfect = roc_points({{{1, 2, 3, 4}, {1, 2}}});
  REQUIRE(perfect.size() == 4);
  CHECK(perfect[1].predictions == 2);
  CHECK(perfect[1].true_positive_rate == 1.0);
  CHECK(perfect[0].true_positive_rate == 0.5);
  CHECK(roc_points({}).empty());

  // Reference: predictions interleave tasks by rank.
  std::mt19937_64 rng(191);
  std::vector<RankedTask> tasks(5);
  for (auto& t : tasks) {
    std::vector<NodeId> nodes(20);
    for (NodeId i = 0; i < 20; ++i) nodes[i] = i;
    std::shuffle(nodes.begin(), nodes.end(), rng);
    t.ranked.assign(nodes.begin(), nodes.begin() + 10 + static_cast<long>(rng() % 10));
    for (int k = 0; k < 3; ++k) t.truth.insert(static_cast<NodeId>(rng() % 20));
  }
  std::size_t total = 0;
  for (const auto& t : tasks) total += t.truth.size();
  std::vector<std::pair<std::size_t, double>> ref;
  std::size_t preds = 0, hits = 0;
  for (std::size_t r = 0; r < 20; ++r) {
    bool any = false;
    for (const auto& t : tasks)
      if (r < t.ranked.size()) {
        any = true;
        ++preds;
        hits += t.truth.count(t.ranked[r]);
      }
    if (any) ref.emplace_back(preds, static_cast<double>(hits) / static_cast<double>(total));
  }
  const auto got = roc_points(tasks);
  REQUIRE(got.size() == ref.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].predictions == ref[i].first);
    CHECK(got[i].true_positive_rate == ref[i].second);
    if (i > 0) CHECK(got[i].true_positive_rate >= got[i - 1].true_positive_rate);
  }
}

TEST_CASE("config parsing") {
  std::istringstream in("# run\nname = demo\nmeasure=ppr\nb1 = 0.3\ngrid_b1 = 0.1, 0.2\ntrain = data/train.tsv\n");
  const HarnessConfig c = parse_config(in, "cfg", "/base");
  CHECK(c.name == "demo");
  CHECK(c.measure == "ppr");
  CHECK(c.b1 == 0.3);
  CHECK(c.grid.at("b1").size() == 2);
  CHECK(c.train == "/base/data/train.tsv");
  std::istringstream bad("nonsense = 1\n");
  try {
    parse_config(bad, "cfg");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("cfg:1") != std::string::npos);
  }
  std::istringstream bad_value("b1 = abc\n");
  CHECK_THROWS_AS(parse_config(bad_value, "cfg"), Error);
}

TEST_CASE("temporal datasets") {
  HarnessConfig cfg;
  PeriodData train, test;
  train.edges = {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"D", "E"}};
  CHECK(build_temporal_dataset(train, test, {}, {}, cfg).tasks.empty());

  test.edges = train.edges;
  test.edges.push_back({"A", "C"});
  const Dataset ds = build_temporal_dataset(train, test, {}, {}, cfg);
  REQUIRE(ds.tasks.size() == 1);
  CHECK(ds.tasks[0].truth.size() == 1);
  CHECK(ds.raw.name(ds.tasks[0].truth[0]) == "C");

  // Qualification bounds.
  PeriodData t2, s2;
  for (int i = 0; i < 25; ++i) t2.edges.push_back({"A", "x" + std::to_string(i)});
  for (int i = 0; i < 5; ++i) t2.edges.push_back({"y" + std::to_string(i), "z"});
  s2.edges = t2.edges;
  for (int i = 0; i < 4; ++i) s2.edges.push_back({"A", "y" + std::to_string(i)});
  HarnessConfig q;
  q.min_new = 5;
  q.max_new_fraction = 0.2;
  CHECK(build_temporal_dataset(t2, s2, {}, {}, q).tasks.empty());
  s2.edges.push_back({"A", "z"});
  CHECK(build_temporal_dataset(t2, s2, {}, {}, q).tasks.size() == 1);
  // Six new links exceed 20% of 25 training links.
  s2.edges.push_back({"A", "y4"});
  CHECK(build_temporal_dataset(t2, s2, {}, {}, q).tasks.empty());

  // Renamed nodes are mapped back; unknown ones are reported.
  PeriodData s3;
  s3.edges = {{"A2", "C"}, {"Q", "A"}};
  const Dataset m = build_temporal_dataset(train, s3, {}, {{"A2", "A"}}, cfg);
  REQUIRE(m.tasks.size() == 1);
  CHECK(m.unmapped == std::vector<std::string>{"Q"});
}

TEST_CASE("evaluation is deterministic across thread counts") {
  PeriodData train, test;
  std::mt19937_64 rng(201);
  for (int i = 0; i < 40; ++i)
    for (int k = 0; k < 3; ++k) {
      const int j = static_cast<int>(rng() % 40);
      if (j != i) train.edges.push_back({"v" + std::to_string(i), "v" + std::to_string(j)});
    }
  test.edges = train.edges;
  for (int i = 0; i < 40; i += 3) test.edges.push_back({"v" + std::to_string(i), "v" + std::to_string((i * 7 + 5) % 40)});
  HarnessConfig cfg;
  cfg.b1 = 0.3;
  const Dataset ds = build_temporal_dataset(train, test, {}, {}, cfg);
  REQUIRE(ds.tasks.size() > 3);
  for (const std::string measure : {"blink", "ppr", "katz", "adamic_adar", "mc"}) {
    cfg.measure = measure;
    cfg.samples = 500;
    cfg.threads = 1;
    const EvaluationReport r1 = evaluate(ds, cfg);
    cfg.threads = 4;
    const EvaluationReport r4 = evaluate(ds, cfg);
    std::ostringstream a, b;
    write_tasks_csv(a, ds, r1);
    write_roc_csv(a, r1.roc);
    write_tasks_csv(b, ds, r4);
    write_roc_csv(b, r4.roc);
    CHECK(a.str() == b.str());
    CHECK(r1.global_precision == r4.global_precision);
    CHECK(r1.map >= 0.0);
    CHECK(r1.map <= 1.0);
    CHECK(r1.random_precision > 0.0);
  }
}

TEST_CASE("task split") {
  const auto [a, b] = split_tasks(10, 0.3, 4);
  CHECK(a.size() == 3);
  CHECK(b.size() == 7);
  const auto [c, d] = split_tasks(10, 0.3, 4);
  CHECK(a == c);
  std::set<std::size_t> all(a.begin(), a.end());
  all.insert(b.begin(), b.end());
  CHECK(all.size() == 10);
}

TEST_CASE("value formatting") {
  CHECK(format_value(0.5) == "0.5");
  CHECK(format_value(1.0 / 3) == "0.333333333333");
}

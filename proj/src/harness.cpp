#include "blink/harness.hpp"

#include "blink/approx.hpp"
#include "blink/baselines.hpp"
#include "blink/error.hpp"
#include "blink/exact.hpp"
#include "blink/monte_carlo.hpp"
#include "blink/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace blink {
namespace {

using PairSets = std::vector<std::set<NodeId>>;

SchemeKind scheme_for(const HarnessConfig& cfg) {
  const std::string s = cfg.scheme.empty() ? (cfg.measure == "ppr" ? "linear" : "exponential") : cfg.scheme;
  if (s == "linear") return SchemeKind::kLinear;
  if (s == "direct") return SchemeKind::kDirect;
  return SchemeKind::kExponential;
}

// Calls fn(a, b) for every ordered pair a period's data relates.
template <typename Fn>
void for_each_pair(const PeriodData& d, bool undirected, Fn&& fn) {
  for (const auto& e : d.edges) {
    if (e.src == e.dst) continue;
    fn(e.src, e.dst);
    if (undirected) fn(e.dst, e.src);
  }
  for (const auto& h : d.hyperedges)
    for (const auto& x : h.members)
      for (const auto& y : h.members)
        if (x != y) fn(x, y);
}

std::map<std::string, std::size_t> activity(const PeriodData& d, bool undirected) {
  std::map<std::string, std::size_t> out;
  for (const auto& e : d.edges) {
    ++out[e.src];
    if (undirected) ++out[e.dst];
  }
  for (const auto& h : d.hyperedges) {
    const std::set<std::string> members(h.members.begin(), h.members.end());
    for (const auto& m : members) ++out[m];
  }
  return out;
}

std::vector<char> nodes_within(const WeightedGraph& g, NodeId a, std::size_t max_hops) {
  std::vector<char> seen(g.node_count(), 0);
  if (max_hops == 0) {
    std::fill(seen.begin(), seen.end(), 1);
    return seen;
  }
  std::vector<NodeId> frontier{a}, next;
  seen[a] = 1;
  for (std::size_t hop = 0; hop < max_hops && !frontier.empty(); ++hop) {
    next.clear();
    for (NodeId x : frontier)
      for (EdgeId e = g.out_begin(x); e < g.out_end(x); ++e) {
        const NodeId y = g.edge(e).dst;
        if (!seen[y]) {
          seen[y] = 1;
          next.push_back(y);
        }
      }
    frontier.swap(next);
  }
  return seen;
}

Variation variation_of(const std::string& v) {
  if (v == "high") return Variation::kHigh;
  if (v == "low") return Variation::kLow;
  return Variation::kMedium;
}

std::vector<double> score_targets(const WeightedGraph& g, NodeId a, const std::vector<NodeId>& targets,
                                  const HarnessConfig& cfg, double rho) {
  std::vector<double> out(targets.size(), 0.0);
  if (targets.empty()) return out;
  const std::string& m = cfg.measure;
  if (m == "blink") {
    if (cfg.variation == "exact") {
      for (std::size_t i = 0; i < targets.size(); ++i) out[i] = exact_blink_score(g, a, targets[i]);
      return out;
    }
    ApproxParams p;
    p.filter.t1 = cfg.t1;
    p.filter.t2 = cfg.t2;
    p.filter.max_paths_per_source = cfg.max_paths;
    p.seed = cfg.seed;
    p.hybrid_top_k = cfg.hybrid_k;
    const ScoreTable t = approx_blink(g, a, std::span<const NodeId>(targets), variation_of(cfg.variation), p);
    std::map<NodeId, double> by_node;
    for (const auto& e : t.entries) by_node[e.node] = e.score;
    for (std::size_t i = 0; i < targets.size(); ++i) out[i] = by_node[targets[i]];
    return out;
  }
  if (m == "ppr") {
    const auto pi = ppr_vector(g, a, cfg.alpha);
    for (std::size_t i = 0; i < targets.size(); ++i) out[i] = pi[targets[i]];
    return out;
  }
  if (m == "katz" || m == "adamic_adar") {
    const ScoreTable t = m == "katz" ? katz_scores(g, a, cfg.beta, rho) : adamic_adar(g, a);
    std::vector<double> dense(g.node_count(), 0.0);
    for (const auto& e : t.entries) dense[e.node] = e.score;
    for (std::size_t i = 0; i < targets.size(); ++i) out[i] = dense[targets[i]];
    return out;
  }
  if (m == "erd") {
    // Smaller expected distance means closer; unconnected pairs score 0.
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const double d = mc_erd(g, a, targets[i], cfg.samples, cfg.seed, cfg.symmetric != "none");
      out[i] = std::isfinite(d) ? 1.0 / d : 0.0;
    }
    return out;
  }
  // Sampled blink score: one traversal per instance covers every target.
  std::vector<std::uint64_t> hits(g.node_count(), 0);
  for (std::uint64_t s = 0; s < cfg.samples; ++s)
    for (NodeId v : sample_reachable_set(g, a, cfg.seed, s)) ++hits[v];
  for (std::size_t i = 0; i < targets.size(); ++i)
    out[i] = score_from_probability(static_cast<double>(hits[targets[i]]) / static_cast<double>(cfg.samples));
  return out;
}

double combine_pair(double ab, double ba, const HarnessConfig& cfg) {
  const std::string& rule = cfg.symmetric;
  if (rule == "min") return symmetric_combine(ab, ba, SymmetricRule::kMin);
  if (rule == "sum") return symmetric_combine(ab, ba, SymmetricRule::kSum);
  if (rule == "product") {
    if (cfg.measure == "blink" || cfg.measure == "mc")
      return symmetric_combine(-std::expm1(-ab), -std::expm1(-ba), SymmetricRule::kProductB);
    return ab * ba;
  }
  return symmetric_combine(ab, ba, SymmetricRule::kMax);
}

std::vector<std::pair<NodeId, double>> rank_impl(const WeightedGraph& g, const Dataset& ds,
                                                 const PredictionTask& task, const HarnessConfig& cfg, double rho) {
  const std::vector<char> near = nodes_within(g, task.source, cfg.max_hops);
  std::vector<NodeId> candidates, scored;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!ds.eligible[v] || std::binary_search(task.excluded.begin(), task.excluded.end(), v)) continue;
    candidates.push_back(v);
    if (near[v]) scored.push_back(v);
  }
  const std::vector<double> s = score_targets(g, task.source, scored, cfg, rho);
  std::vector<double> dense(g.node_count(), 0.0);
  for (std::size_t i = 0; i < scored.size(); ++i) dense[scored[i]] = s[i];
  std::vector<ScoreEntry> entries;
  entries.reserve(candidates.size());
  for (NodeId v : candidates) entries.push_back(ScoreEntry{v, dense[v]});
  const ScoreTable t = make_score_table(g, task.source, std::move(entries));
  std::vector<std::pair<NodeId, double>> out;
  out.reserve(t.entries.size());
  for (const auto& e : t.entries) out.emplace_back(e.node, e.score);
  return out;
}

}  // namespace

Dataset build_temporal_dataset(const PeriodData& train, const PeriodData& test, const std::vector<NodeLine>& nodes,
                               const std::map<std::string, std::string>& mapping, const HarnessConfig& cfg) {
  Dataset ds;
  ds.undirected = cfg.undirected || cfg.format == "hyperedges";
  if (cfg.format == "hyperedges") {
    if (cfg.knowledge == "arxiv") {
      for (std::size_t i = 0; i < train.hyperedges.size(); ++i) {
        const auto& rec = train.hyperedges[i];
        const std::set<std::string> members(rec.members.begin(), rec.members.end());
        if (members.size() < 2) throw Error(ErrorCode::kInvalidArgument, "paper with fewer than 2 authors");
        for (const auto& m : rec.members) ds.raw.intern(m);
        const NodeId paper = ds.raw.intern("~p" + std::to_string(i));
        for (const auto& m : members) {
          const NodeId a = *ds.raw.find(m);
          ds.raw.add_edge(a, paper, 1.0);
          ds.raw.add_edge(paper, a, 1.0);
        }
      }
      ds.is_paper.assign(ds.raw.node_count(), 0);
      for (NodeId v = 0; v < ds.raw.node_count(); ++v) ds.is_paper[v] = ds.raw.name(v).rfind("~p", 0) == 0;
    } else {
      ds.raw = raw_from_hyperedges(train.hyperedges);
    }
    for (const auto& n : nodes) ds.raw.set_node_f(ds.raw.intern(n.name), n.value);
  } else {
    ds.raw = raw_from_lines(train.edges, nodes, cfg.undirected);
  }
  const std::size_t n = ds.raw.node_count();
  if (ds.is_paper.empty()) ds.is_paper.assign(n, 0);

  auto regular = [&](NodeId v) { return ds.raw.node_kind(v) == NodeKind::kRegular && !ds.is_paper[v]; };

  PairSets out_train(n), in_train(n), out_test(n);
  for_each_pair(train, cfg.undirected, [&](const std::string& x, const std::string& y) {
    const NodeId a = *ds.raw.find(x);
    const NodeId b = *ds.raw.find(y);
    out_train[a].insert(b);
    in_train[b].insert(a);
  });
  std::set<std::string> unmapped;
  auto resolve = [&](const std::string& name) -> std::optional<NodeId> {
    auto it = mapping.find(name);
    const std::string& target = it == mapping.end() ? name : it->second;
    auto id = ds.raw.find(target);
    if (!id || !regular(*id)) {
      unmapped.insert(name);
      return std::nullopt;
    }
    return id;
  };
  for_each_pair(test, cfg.undirected, [&](const std::string& x, const std::string& y) {
    const auto a = resolve(x);
    const auto b = resolve(y);
    if (a && b && *a != *b) out_test[*a].insert(*b);
  });
  ds.unmapped.assign(unmapped.begin(), unmapped.end());

  const bool core_rule = cfg.core_min_train > 0 || cfg.core_min_test > 0;
  std::vector<char> core(n, 1);
  if (core_rule) {
    const auto act_train = activity(train, cfg.undirected);
    std::map<std::string, std::size_t> act_test_raw = activity(test, cfg.undirected);
    std::vector<std::size_t> act_test(n, 0);
    for (const auto& [name, count] : act_test_raw)
      if (auto id = resolve(name)) act_test[*id] += count;
    for (NodeId v = 0; v < n; ++v) {
      auto it = act_train.find(ds.raw.name(v));
      const std::size_t tr = it == act_train.end() ? 0 : it->second;
      core[v] = tr >= cfg.core_min_train && act_test[v] >= cfg.core_min_test;
    }
  }
  ds.eligible.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) ds.eligible[v] = regular(v) && core[v];

  for (NodeId a = 0; a < n; ++a) {
    if (!ds.eligible[a]) continue;
    std::set<NodeId> excluded{a};
    excluded.insert(out_train[a].begin(), out_train[a].end());
    if (cfg.exclude_in_neighbors) excluded.insert(in_train[a].begin(), in_train[a].end());
    PredictionTask t;
    t.source = a;
    for (NodeId b : out_test[a])
      if (!excluded.count(b) && ds.eligible[b]) t.truth.push_back(b);
    if (t.truth.size() < std::max<std::size_t>(cfg.min_new, 1)) continue;
    if (cfg.max_new_fraction > 0.0 &&
        static_cast<double>(t.truth.size()) > cfg.max_new_fraction * static_cast<double>(out_train[a].size()))
      continue;
    t.excluded.assign(excluded.begin(), excluded.end());
    ds.tasks.push_back(std::move(t));
  }
  return ds;
}

std::map<std::string, std::string> read_mapping_file(const std::string& path) {
  std::map<std::string, std::string> out;
  // Same layout as an edge list without values.
  for (const auto& line : read_edge_file(path)) out[line.dst] = line.src;
  return out;
}

Dataset load_temporal_dataset(const HarnessConfig& cfg) {
  if (cfg.train.empty()) throw Error(ErrorCode::kInvalidArgument, "config names no training file");
  PeriodData train, test;
  if (cfg.format == "hyperedges") {
    train.hyperedges = read_hyperedge_file(cfg.train);
    if (!cfg.test.empty()) test.hyperedges = read_hyperedge_file(cfg.test);
  } else {
    train.edges = read_edge_file(cfg.train);
    if (!cfg.test.empty()) test.edges = read_edge_file(cfg.test);
  }
  const std::vector<NodeLine> nodes = cfg.nodes.empty() ? std::vector<NodeLine>{} : read_node_file(cfg.nodes);
  const auto mapping = cfg.mapping.empty() ? std::map<std::string, std::string>{} : read_mapping_file(cfg.mapping);
  return build_temporal_dataset(train, test, nodes, mapping, cfg);
}

double average_precision(const std::vector<NodeId>& ranked, const std::set<NodeId>& truth) {
  if (truth.empty()) return 0.0;
  std::size_t hits = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (!truth.count(ranked[i])) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  return sum / static_cast<double>(truth.size());
}

double mean_average_precision(const std::vector<RankedTask>& tasks) {
  if (tasks.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& t : tasks) sum += average_precision(t.ranked, t.truth);
  return sum / static_cast<double>(tasks.size());
}

std::vector<RocPoint> roc_points(const std::vector<RankedTask>& tasks, std::size_t max_predictions) {
  std::size_t total_truth = 0;
  std::size_t longest = 0;
  for (const auto& t : tasks) {
    total_truth += t.truth.size();
    longest = std::max(longest, t.ranked.size());
  }
  std::vector<RocPoint> out;
  if (total_truth == 0) return out;
  std::size_t predictions = 0;
  std::size_t hits = 0;
  for (std::size_t r = 0; r < longest; ++r) {
    for (const auto& t : tasks) {
      if (r >= t.ranked.size()) continue;
      ++predictions;
      hits += t.truth.count(t.ranked[r]);
    }
    if (max_predictions > 0 && predictions > max_predictions) break;
    out.push_back(RocPoint{predictions, static_cast<double>(hits) / static_cast<double>(total_truth)});
  }
  return out;
}

HarnessConfig with_point(const HarnessConfig& cfg, const ParamPoint& point) {
  HarnessConfig c = cfg;
  for (const auto& [k, v] : point) c.set(k, format_value(v));
  return c;
}

WeightedGraph weigh_dataset(const Dataset& ds, const HarnessConfig& cfg) {
  if (cfg.knowledge == "none") return apply_weights(ds.raw, WeightScheme{scheme_for(cfg), cfg.b1, cfg.b2});
  RawGraph raw = ds.raw;
  if (cfg.knowledge == "wiki")
    apply_knowledge(raw, wiki_knowledge(raw, cfg.gamma));
  else
    apply_knowledge(raw, arxiv_knowledge(raw, ds.is_paper, cfg.gamma));
  return apply_weights(raw, WeightScheme{scheme_for(cfg), cfg.b1, cfg.b2});
}

std::vector<std::pair<NodeId, double>> rank_task(const WeightedGraph& g, const Dataset& ds, const PredictionTask& task,
                                                 const HarnessConfig& cfg) {
  const double rho = cfg.measure == "katz" ? katz_spectral_radius(g) : -1.0;
  return rank_impl(g, ds, task, cfg, rho);
}

EvaluationReport evaluate(const Dataset& ds, const HarnessConfig& cfg, const std::vector<std::size_t>& task_ids) {
  std::vector<std::size_t> ids = task_ids;
  if (ids.empty()) {
    ids.resize(ds.tasks.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  }
  const WeightedGraph g = weigh_dataset(ds, cfg);
  const double rho = cfg.measure == "katz" ? katz_spectral_radius(g) : -1.0;

  std::vector<std::vector<std::pair<NodeId, double>>> rankings(ids.size());
  parallel_for_each(ids.size(), cfg.threads,
                    [&](std::size_t i) { rankings[i] = rank_impl(g, ds, ds.tasks.at(ids[i]), cfg, rho); });

  EvaluationReport r;
  std::vector<RankedTask> ranked(ids.size());
  std::size_t total_truth = 0, total_hits = 0;
  double expected_hits = 0.0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const PredictionTask& task = ds.tasks[ids[i]];
    RankedTask& rt = ranked[i];
    rt.truth.insert(task.truth.begin(), task.truth.end());
    for (const auto& [v, score] : rankings[i]) rt.ranked.push_back(v);
    std::size_t hits = 0;
    for (std::size_t k = 0; k < rt.ranked.size() && k < rt.truth.size(); ++k) hits += rt.truth.count(rt.ranked[k]);
    const std::size_t c = rt.ranked.size();
    r.tasks.push_back(TaskOutcome{task.source, rt.truth.size(), hits, c, average_precision(rt.ranked, rt.truth)});
    total_truth += rt.truth.size();
    total_hits += hits;
    if (c > 0) expected_hits += static_cast<double>(rt.truth.size() * std::min(rt.truth.size(), c)) / static_cast<double>(c);
  }
  if (total_truth > 0) {
    r.precision = static_cast<double>(total_hits) / static_cast<double>(total_truth);
    r.random_precision = expected_hits / static_cast<double>(total_truth);
  }
  r.map = mean_average_precision(ranked);
  r.roc = roc_points(ranked);

  // All (source, target) pairs ranked together; undirected pairs merge both directions.
  using Key = std::pair<NodeId, NodeId>;
  const bool merge = ds.undirected || cfg.symmetric != "none";
  std::map<Key, std::pair<double, double>> pair_scores;
  std::set<Key> truth_pairs;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const NodeId a = ds.tasks[ids[i]].source;
    for (const auto& [b, score] : rankings[i]) {
      const Key k = merge ? Key{std::min(a, b), std::max(a, b)} : Key{a, b};
      auto& slot = pair_scores[k];
      (merge && a > b ? slot.second : slot.first) = score;
    }
    for (NodeId b : ds.tasks[ids[i]].truth) truth_pairs.insert(merge ? Key{std::min(a, b), std::max(a, b)} : Key{a, b});
  }
  std::vector<std::pair<double, Key>> merged;
  merged.reserve(pair_scores.size());
  for (const auto& [k, s] : pair_scores)
    merged.emplace_back(merge ? combine_pair(s.first, s.second, cfg) : s.first, k);
  std::sort(merged.begin(), merged.end(),
            [](const auto& x, const auto& y) { return x.first != y.first ? x.first > y.first : x.second < y.second; });
  std::vector<Key> order;
  order.reserve(merged.size());
  for (const auto& m : merged) order.push_back(m.second);
  r.global_precision = topk_precision(order, truth_pairs);

  r.metric = cfg.metric == "map" ? r.map : cfg.metric == "global_precision" ? r.global_precision : r.precision;
  return r;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_tasks(std::size_t count, double train_fraction,
                                                                          std::uint64_t seed) {
  std::vector<std::size_t> idx(count);
  for (std::size_t i = 0; i < count; ++i) idx[i] = i;
  // Fisher-Yates driven by the counter-based draw, portable across standard libraries.
  for (std::size_t i = count; i > 1; --i) {
    const auto j = static_cast<std::size_t>(blink_draw(seed, 0x5eedULL, i) * static_cast<double>(i));
    std::swap(idx[i - 1], idx[std::min(j, i - 1)]);
  }
  const auto k = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(count)));
  std::vector<std::size_t> first(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<std::size_t> second(idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end());
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  return {first, second};
}

std::vector<ParamPoint> config_grid(const HarnessConfig& cfg) {
  if (!cfg.grid.empty()) return expand_grid(cfg.grid);
  return {ParamPoint{}};
}

GridResult scan(const Dataset& ds, const HarnessConfig& cfg, const std::vector<std::size_t>& task_ids) {
  // Grid points run one after another; each evaluation spreads its tasks over the workers.
  return grid_search(
      config_grid(cfg), [&](const ParamPoint& p) { return evaluate(ds, with_point(cfg, p), task_ids).metric; }, 1);
}

PredictOutcome predict(const Dataset& ds, const HarnessConfig& cfg) {
  PredictOutcome out;
  if (cfg.train_fraction > 0.0) {
    std::tie(out.selection_tasks, out.evaluation_tasks) = split_tasks(ds.tasks.size(), cfg.train_fraction, cfg.seed);
  } else {
    for (std::size_t i = 0; i < ds.tasks.size(); ++i) out.evaluation_tasks.push_back(i);
    out.selection_tasks = out.evaluation_tasks;
  }
  if (!cfg.grid.empty() && !out.selection_tasks.empty()) out.chosen = scan(ds, cfg, out.selection_tasks).best;
  if (out.evaluation_tasks.empty()) return out;
  out.report = evaluate(ds, with_point(cfg, out.chosen), out.evaluation_tasks);
  return out;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_tasks_csv(std::ostream& out, const Dataset& ds, const EvaluationReport& r) {
  out << "source,truth,hits,candidates,average_precision\n";
  for (const auto& t : r.tasks)
    out << ds.raw.name(t.source) << ',' << t.truth << ',' << t.hits << ',' << t.candidates << ','
        << format_value(t.average_precision) << '\n';
}

void write_roc_csv(std::ostream& out, const std::vector<RocPoint>& roc) {
  out << "predictions,true_positive_rate\n";
  for (const auto& p : roc) out << p.predictions << ',' << format_value(p.true_positive_rate) << '\n';
}

void write_summary_csv(std::ostream& out, const HarnessConfig& cfg, const PredictOutcome& p) {
  out << "key,value\n";
  out << "name," << cfg.name << '\n';
  out << "measure," << cfg.measure << '\n';
  if (cfg.measure == "blink") out << "variation," << cfg.variation << '\n';
  for (const auto& [k, v] : p.chosen) out << k << ',' << format_value(v) << '\n';
  out << "selection_tasks," << p.selection_tasks.size() << '\n';
  out << "evaluation_tasks," << p.evaluation_tasks.size() << '\n';
  out << "precision," << format_value(p.report.precision) << '\n';
  out << "random_precision," << format_value(p.report.random_precision) << '\n';
  out << "global_precision," << format_value(p.report.global_precision) << '\n';
  out << "map," << format_value(p.report.map) << '\n';
  out << "metric," << format_value(p.report.metric) << '\n';
}

void write_scan_csv(std::ostream& out, const GridResult& r) {
  if (r.evaluated.empty()) return;
  for (const auto& [k, v] : r.evaluated.front().first) out << k << ',';
  out << "metric\n";
  for (const auto& [point, metric] : r.evaluated) {
    for (const auto& [k, v] : point) out << format_value(v) << ',';
    out << format_value(metric) << '\n';
  }
}

}  // namespace blink

#include "blink/approx.hpp"

#include "blink/error.hpp"
#include "blink/monte_carlo.hpp"
#include "blink/parallel.hpp"
#include "blink/simd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace blink {
namespace {

// Per-path chain layout shared by the medium and low constructions.
struct ChainTemplate {
  std::vector<double> weights;
  std::vector<std::uint32_t> resources;
  ChainTaps medium_taps;
  ChainTaps low_taps;
  double len2_sum = 0.0;
};

ChainTemplate chain_template(const WeightedGraph& g, const MinimalPath& p) {
  if (p.length() < 3) throw Error(ErrorCode::kInvalidArgument, "surrogate chains need a path longer than 2");
  ChainTemplate t;
  const std::size_t n = p.length();
  for (std::size_t i = 0; i < n; ++i) {
    t.weights.push_back(g.edge_weight(p.edges[i]));
    t.resources.push_back(p.edges[i]);
    if (i + 1 < n) {
      const NodeId v = p.nodes[i + 1];
      if (g.node_weight(v) < 1.0) {
        t.weights.push_back(g.node_weight(v));
        t.resources.push_back(static_cast<std::uint32_t>(g.edge_count() + v));
      }
    }
  }
  const std::size_t m = t.weights.size();
  const NodeId a = p.nodes.front();
  const NodeId b = p.nodes.back();
  const NodeId c = p.nodes[1];
  const NodeId d = p.nodes[n - 1];
  const double wc = g.node_weight(c);
  const double wd = g.node_weight(d);

  t.medium_taps.tap_c = wc < 1.0 ? 2 : 1;
  t.medium_taps.tap_d = wd < 1.0 ? m - 2 : m - 1;
  if (auto e = g.find_edge(a, d)) {
    t.medium_taps.x = g.edge_weight(*e);
    t.len2_sum += nominal_from_product(g.edge_weight(*e) * wd * g.edge_weight(p.edges.back()));
  }
  if (auto e = g.find_edge(c, b)) {
    t.medium_taps.y = g.edge_weight(*e);
    t.len2_sum += nominal_from_product(g.edge_weight(p.edges.front()) * wc * g.edge_weight(*e));
  }
  // The low chain folds the end nodes into its middle stage, so the tap
  // edges carry those node weights instead.
  t.low_taps = t.medium_taps;
  t.low_taps.x *= wd;
  t.low_taps.y *= wc;
  return t;
}

std::vector<ChainResource> chain_resources(const ChainTemplate& t, const UsageLookup& usage) {
  std::vector<ChainResource> out(t.weights.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = ChainResource{t.weights[k], usage(t.resources[k])};
  return out;
}

std::uint64_t subgraph_seed(std::uint64_t seed, NodeId a, NodeId b, std::size_t index) {
  return static_cast<std::uint64_t>(blink_draw(seed, (static_cast<std::uint64_t>(a) << 32) | b, index) * 0x1.0p53);
}

bool below_len2(double sg, double len2) { return sg < len2 - 1e-9 * std::max(1.0, len2); }

}  // namespace

double PathContributionState::total() const noexcept { return std::accumulate(s_hat.begin(), s_hat.end(), 0.0); }

PathContributionState initial_state(std::vector<MinimalPath> paths) {
  PathContributionState s;
  s.s_hat.reserve(paths.size());
  for (const auto& p : paths) s.s_hat.push_back(p.nominal);
  s.paths = std::move(paths);
  return s;
}

std::vector<std::uint32_t> path_resources(const WeightedGraph& g, const MinimalPath& p) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    out.push_back(p.edges[i]);
    if (i + 1 < p.length() && g.node_weight(p.nodes[i + 1]) < 1.0)
      out.push_back(static_cast<std::uint32_t>(g.edge_count() + p.nodes[i + 1]));
  }
  return out;
}

EdgeUsageTable compute_edge_usage(const WeightedGraph& g, const PathContributionState& state) {
  std::unordered_map<std::uint32_t, double> usage;
  for (std::size_t i = 0; i < state.paths.size(); ++i) {
    if (state.paths[i].length() <= 2) continue;
    for (std::uint32_t r : path_resources(g, state.paths[i])) usage[r] += state.s_hat[i];
  }
  EdgeUsageTable out(usage.begin(), usage.end());
  std::sort(out.begin(), out.end());
  return out;
}

void update_step(PathContributionState& state, std::span<const double> sg, std::span<const double> len2_sum,
                 std::span<const double> denom) {
  const std::size_t n = state.paths.size();
  if (sg.size() != n || len2_sum.size() != n || denom.size() != n)
    throw Error(ErrorCode::kInvalidArgument, "update inputs do not match the path count");
  std::vector<double> next = state.s_hat;
  for (std::size_t i = 0; i < n; ++i) {
    const MinimalPath& p = state.paths[i];
    if (p.length() <= 2 || !(denom[i] > 0.0)) continue;
    if (below_len2(sg[i], len2_sum[i]))
      throw Error(ErrorCode::kNumeric, "subgraph score below the length-2 paths it contains");
    const double v = state.s_hat[i] * std::max(sg[i] - len2_sum[i], 0.0) / denom[i];
    next[i] = std::clamp(v, 0.0, p.nominal);
  }
  state.converged = simd::max_rel_diff(next, state.s_hat, 1e-12) < 1e-9;
  state.s_hat = std::move(next);
  ++state.iteration;
}

WeightedGraph select_subgraph_high(const WeightedGraph& g, const MinimalPath& path_i,
                                   std::span<const MinimalPath> all) {
  const auto own = path_resources(g, path_i);
  const std::unordered_set<std::uint32_t> mine(own.begin(), own.end());
  std::vector<EdgeId> edges(path_i.edges.begin(), path_i.edges.end());
  for (const auto& p : all) {
    const auto res = path_resources(g, p);
    if (std::any_of(res.begin(), res.end(), [&](std::uint32_t r) { return mine.count(r) > 0; }))
      edges.insert(edges.end(), p.edges.begin(), p.edges.end());
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  GraphBuilder out;
  for (NodeId v : path_i.nodes) out.intern(g.name(v));
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    out.add_edge(g.name(ed.src), g.name(ed.dst), ed.weight);
  }
  // Endpoint weights never matter; every other node keeps its own.
  const NodeId a = path_i.source();
  const NodeId z = path_i.target();
  for (EdgeId e : edges)
    for (NodeId v : {g.edge(e).src, g.edge(e).dst})
      if (v != a && v != z) out.set_node_weight(out.intern(g.name(v)), g.node_weight(v));
  return std::move(out).build();
}

SubgraphScore eval_subgraph_score(const WeightedGraph& sub, NodeId a, NodeId b, std::uint64_t samples,
                                  std::uint64_t seed, const ExactOptions& opt) {
  try {
    return {exact_blink_score(sub, a, b, opt), true};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCapExceeded) throw;
  }
  const McEstimate est = mc_blink_estimate(sub, a, b, samples, seed);
  return {score_from_probability(est.mean), false};
}

HypotheticalResult build_hypothetical_medium(const WeightedGraph& g, const MinimalPath& path_i,
                                             const UsageLookup& usage) {
  const ChainTemplate t = chain_template(g, path_i);
  const ChainResult c = medium_chain(chain_resources(t, usage), t.medium_taps);
  return HypotheticalResult{score_from_probability(c.probability), t.len2_sum, c.max_usage, c.bypasses, c.ops};
}

HypotheticalResult build_hypothetical_low(const WeightedGraph& g, const MinimalPath& path_i,
                                          const UsageLookup& usage) {
  const ChainTemplate t = chain_template(g, path_i);
  const ChainResult c = low_chain(chain_resources(t, usage), t.low_taps);
  return HypotheticalResult{score_from_probability(c.probability), t.len2_sum, c.max_usage, {}, c.ops};
}

PathContributionState refine_contributions(const WeightedGraph& g, std::vector<MinimalPath> paths, Variation v,
                                           const ApproxParams& params, const IterationObserver& observer) {
  PathContributionState state = initial_state(std::move(paths));
  const std::size_t n = state.paths.size();
  if (observer) observer(state);

  std::vector<std::size_t> longs;
  for (std::size_t i = 0; i < n; ++i)
    if (state.paths[i].length() > 2) longs.push_back(i);
  if (longs.empty()) {
    state.converged = true;
    return state;
  }
  const NodeId a = state.paths.front().source();
  const NodeId b = state.paths.front().target();

  std::vector<double> sg(n, 0.0), len2(n, 0.0), denom(n, 0.0);

  // High variation: subgraphs and their scores are fixed across iterations.
  std::vector<std::vector<std::size_t>> contained_long;
  if (v == Variation::kHigh) {
    contained_long.resize(n);
    for (std::size_t i : longs) {
      const WeightedGraph sub = select_subgraph_high(g, state.paths[i], state.paths);
      const SubgraphScore s = eval_subgraph_score(sub, sub.id(g.name(a)), sub.id(g.name(b)), params.mc_samples,
                                                  subgraph_seed(params.seed, a, b, i), params.exact);
      for (std::size_t j = 0; j < n; ++j) {
        const MinimalPath& p = state.paths[j];
        bool inside = true;
        for (std::size_t k = 0; k + 1 < p.nodes.size() && inside; ++k) {
          const auto x = sub.find(g.name(p.nodes[k]));
          const auto y = sub.find(g.name(p.nodes[k + 1]));
          inside = x && y && sub.find_edge(*x, *y).has_value();
        }
        if (!inside) continue;
        if (p.length() <= 2)
          len2[i] += p.nominal;
        else
          contained_long[i].push_back(j);
      }
      if (below_len2(s.score, len2[i]) && s.exact)
        throw Error(ErrorCode::kNumeric, "subgraph score below the length-2 paths it contains");
      sg[i] = std::max(s.score, len2[i]);
    }
  }

  // Medium/low: compact resource numbering for the usage table.
  std::vector<ChainTemplate> templates;
  std::unordered_map<std::uint32_t, std::uint32_t> local;
  std::vector<std::vector<std::uint32_t>> path_local;
  std::vector<double> usage;
  if (v != Variation::kHigh) {
    templates.resize(n);
    path_local.resize(n);
    for (std::size_t i : longs) {
      templates[i] = chain_template(g, state.paths[i]);
      for (std::uint32_t r : templates[i].resources) {
        auto [it, inserted] = local.try_emplace(r, static_cast<std::uint32_t>(local.size()));
        path_local[i].push_back(it->second);
      }
      len2[i] = templates[i].len2_sum;
    }
    usage.resize(local.size());
  }

  std::vector<ChainResource> scratch;
  for (int iter = 0; iter < params.max_iterations; ++iter) {
    if (v == Variation::kHigh) {
      for (std::size_t i : longs) {
        double d = 0.0;
        for (std::size_t j : contained_long[i]) d += state.s_hat[j];
        denom[i] = d;
      }
    } else {
      std::fill(usage.begin(), usage.end(), 0.0);
      for (std::size_t i : longs)
        for (std::uint32_t r : path_local[i]) usage[r] += state.s_hat[i];
      for (std::size_t i : longs) {
        if (state.s_hat[i] <= 0.0) {
          denom[i] = 0.0;
          continue;
        }
        const ChainTemplate& t = templates[i];
        scratch.resize(t.weights.size());
        for (std::size_t k = 0; k < scratch.size(); ++k) scratch[k] = ChainResource{t.weights[k], usage[path_local[i][k]]};
        const ChainResult c =
            v == Variation::kMedium ? medium_chain(scratch, t.medium_taps) : low_chain(scratch, t.low_taps);
        sg[i] = score_from_probability(c.probability);
        denom[i] = c.max_usage;
      }
    }
    std::vector<double> prev = state.s_hat;
    update_step(state, sg, len2, denom);
    state.converged = simd::max_rel_diff(state.s_hat, prev, 1e-12) < params.tolerance;
    if (observer) observer(state);
    if (state.converged) break;
  }
  return state;
}

ScoreTable approx_blink(const WeightedGraph& g, NodeId a, std::optional<std::span<const NodeId>> targets,
                        Variation v, const ApproxParams& params) {
  if (a >= g.node_count()) throw Error(ErrorCode::kInvalidArgument, "source out of range");
  const BestPathTree best(g, a);
  std::vector<NodeId> list;
  if (targets) {
    for (NodeId t : *targets)
      if (t != a) list.push_back(t);
  } else {
    for (NodeId t = 0; t < g.node_count(); ++t)
      if (t != a && best.reachable(t)) list.push_back(t);
  }
  const PathSets sets = enumerate_minimal_paths(g, a, params.filter, std::span<const NodeId>(list));

  auto score_target = [&](NodeId t, Variation var) -> double {
    auto it = sets.find(t);
    if (it != sets.end() && !it->second.empty()) return refine_contributions(g, it->second, var, params).total();
    return best.reachable(t) ? best.path_to(t).nominal : 0.0;
  };

  std::vector<ScoreEntry> entries(list.size());
  parallel_for_each(list.size(), params.threads,
                    [&](std::size_t i) { entries[i] = ScoreEntry{list[i], score_target(list[i], v)}; });
  ScoreTable table = make_score_table(g, a, std::move(entries));

  if (params.hybrid_top_k > 0 && v != Variation::kHigh) {
    const std::size_t k = std::min(params.hybrid_top_k, table.entries.size());
    std::vector<ScoreEntry> top(table.entries.begin(), table.entries.begin() + static_cast<std::ptrdiff_t>(k));
    parallel_for_each(k, params.threads, [&](std::size_t i) { top[i].score = score_target(top[i].node, Variation::kHigh); });
    std::sort(top.begin(), top.end(), [&](const ScoreEntry& x, const ScoreEntry& y) { return ranks_before(g, x, y); });
    std::copy(top.begin(), top.end(), table.entries.begin());
  }
  return table;
}

double approx_blink_pair(const WeightedGraph& g, NodeId a, NodeId b, Variation v, const ApproxParams& params) {
  const NodeId t[] = {b};
  const ScoreTable table = approx_blink(g, a, std::span<const NodeId>(t), v, params);
  return table.entries.empty() ? 0.0 : table.entries.front().score;
}

}  // namespace blink

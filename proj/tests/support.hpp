#pragma once

#include "blink/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace blink::test {

struct RandomGraphSpec {
  std::size_t min_nodes = 3;
  std::size_t max_nodes = 7;
  std::size_t max_edges = 12;
  double min_weight = 0.05;
  double max_weight = 0.95;
  /// Chance that a node other than the endpoints gets a weight below 1.
  double node_weight_chance = 0.0;
  bool undirected = false;
};

/// Random simple digraph on nodes "n0".."n<k>"; node 0 always has an out-edge.
inline WeightedGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec = {}) {
  std::uniform_int_distribution<std::size_t> nd(spec.min_nodes, spec.max_nodes);
  const std::size_t n = nd(rng);
  std::uniform_real_distribution<double> wd(spec.min_weight, spec.max_weight);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = 0; j < n; ++j)
      if (i != j && (!spec.undirected || i < j)) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const std::size_t per_pair = spec.undirected ? 2 : 1;
  std::uniform_int_distribution<std::size_t> md(1, std::max<std::size_t>(1, spec.max_edges / per_pair));
  std::size_t m = std::min(md(rng), pairs.size());
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) {
    const bool weighted = i > 1 && coin(rng) < spec.node_weight_chance;
    b.add_node("n" + std::to_string(i), weighted ? wd(rng) : 1.0);
  }
  bool source_used = false;
  for (std::size_t k = 0; k < m; ++k) source_used |= pairs[k].first == 0 || (spec.undirected && pairs[k].second == 0);
  if (!source_used) {
    for (std::size_t k = m; k < pairs.size(); ++k)
      if (pairs[k].first == 0) {
        std::swap(pairs[0], pairs[k]);
        break;
      }
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (spec.undirected)
      b.add_undirected_edge(pairs[k].first, pairs[k].second, wd(rng));
    else
      b.add_edge(pairs[k].first, pairs[k].second, wd(rng));
  }
  return std::move(b).build();
}

/// Reachability probability by listing every state of the listed edges
/// (parallel edges allowed) and of the weighted nodes other than a and b.
inline double enumerate_reachability(std::size_t n, const std::vector<Edge>& edges,
                                     const std::vector<double>& node_weight, NodeId a, NodeId b) {
  if (a == b) return 1.0;
  std::vector<NodeId> weighted;
  for (NodeId v = 0; v < n; ++v)
    if (v != a && v != b && node_weight[v] < 1.0) weighted.push_back(v);
  const std::size_t me = edges.size(), mv = weighted.size();
  const std::size_t total = me + mv;
  double sum = 0.0;
  std::vector<char> node_up(n);
  std::vector<char> seen(n);
  std::vector<NodeId> stack;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
    double p = 1.0;
    for (std::size_t e = 0; e < me; ++e) p *= (mask >> e & 1) ? edges[e].weight : 1.0 - edges[e].weight;
    std::fill(node_up.begin(), node_up.end(), 1);
    for (std::size_t k = 0; k < mv; ++k) {
      const double w = node_weight[weighted[k]];
      const bool up = mask >> (me + k) & 1;
      node_up[weighted[k]] = up;
      p *= up ? w : 1.0 - w;
    }
    if (p == 0.0) continue;
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, a);
    seen[a] = 1;
    bool hit = false;
    while (!stack.empty() && !hit) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (std::size_t e = 0; e < me; ++e) {
        if (edges[e].src != v || !(mask >> e & 1)) continue;
        const NodeId u = edges[e].dst;
        if (seen[u] || !node_up[u]) continue;
        if (u == b) {
          hit = true;
          break;
        }
        seen[u] = 1;
        stack.push_back(u);
      }
    }
    if (hit) sum += p;
  }
  return sum;
}

inline double enumerate_reachability(const WeightedGraph& g, NodeId a, NodeId b) {
  const std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const std::vector<double> nw(g.node_weights().begin(), g.node_weights().end());
  return enumerate_reachability(g.node_count(), edges, nw, a, b);
}

/// Every simple A->B path as a node list, by plain recursion.
inline void all_simple_paths(const WeightedGraph& g, NodeId v, NodeId b, std::vector<NodeId>& cur,
                             std::vector<std::vector<NodeId>>& out) {
  if (v == b) {
    out.push_back(cur);
    return;
  }
  for (EdgeId e = g.out_begin(v); e < g.out_end(v); ++e) {
    const NodeId u = g.edge(e).dst;
    if (std::find(cur.begin(), cur.end(), u) != cur.end()) continue;
    cur.push_back(u);
    all_simple_paths(g, u, b, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<NodeId>> all_simple_paths(const WeightedGraph& g, NodeId a, NodeId b) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> cur{a};
  all_simple_paths(g, a, b, cur, out);
  return out;
}

}  // namespace blink::test

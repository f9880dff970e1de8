#include "blink/paths.hpp"

#include "blink/error.hpp"
#include "blink/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace blink {
namespace {

double log_complement(double w) { return std::log(std::max(1.0 - w, 1e-15)); }

bool path_order(const MinimalPath& x, const MinimalPath& y) {
  if (x.nominal != y.nominal) return x.nominal > y.nominal;
  return x.nodes < y.nodes;
}

}  // namespace

double nominal_from_product(double product) noexcept { return score_from_probability(product); }

double nominal_contribution(std::span<const double> weights) {
  double p = 1.0;
  for (double w : weights) p *= w;
  return nominal_from_product(p);
}

MinimalPath make_path(const WeightedGraph& g, std::vector<NodeId> nodes) {
  if (nodes.size() < 2) throw Error(ErrorCode::kInvalidArgument, "a path needs at least two nodes");
  std::vector<NodeId> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::kInvalidArgument, "path repeats a node");
  MinimalPath p;
  p.product = 1.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto e = g.find_edge(nodes[i], nodes[i + 1]);
    if (!e) throw Error(ErrorCode::kInvalidArgument, "missing edge " + g.name(nodes[i]) + "->" + g.name(nodes[i + 1]));
    p.edges.push_back(*e);
    p.product *= g.edge_weight(*e);
    if (i > 0) p.product *= g.node_weight(nodes[i]);
  }
  p.nodes = std::move(nodes);
  p.nominal = nominal_from_product(p.product);
  return p;
}

double fanout_factor(const WeightedGraph& g, EdgeId e) {
  const NodeId x = g.edge(e).src;
  double total = 0.0;
  for (EdgeId f = g.out_begin(x); f < g.out_end(x); ++f) total += log_complement(g.edge_weight(f));
  if (total == 0.0) return 1.0 / static_cast<double>(g.out_degree(x));
  return log_complement(g.edge_weight(e)) / total;
}

PathSets enumerate_minimal_paths(const WeightedGraph& g, NodeId a, const PathFilterParams& params,
                                 std::optional<std::span<const NodeId>> targets) {
  if (a >= g.node_count()) throw Error(ErrorCode::kInvalidArgument, "source out of range");
  if (!(params.t1 >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "t1 must be non-negative");
  if (!(params.t2 > 0.0 && params.t2 <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "t2 must lie in (0, 1]");

  const std::size_t n = g.node_count();
  // Smallest product whose nominal still reaches t1.
  const double min_product = -std::expm1(-params.t1);

  std::vector<double> out_log_sum(n, 0.0);
  for (const Edge& e : g.edges()) out_log_sum[e.src] += log_complement(e.weight);

  std::vector<char> wanted;
  if (targets) {
    wanted.assign(n, 0);
    for (NodeId t : *targets) wanted.at(t) = 1;
  }

  struct Frame {
    NodeId node;
    EdgeId next;
    // Product of the prefix ending here, including this node's own weight.
    double through;
    double fan;
  };
  std::vector<Frame> stack;
  std::vector<NodeId> path_nodes{a};
  std::vector<EdgeId> path_edges;
  std::vector<char> on_path(n, 0);
  on_path[a] = 1;
  stack.push_back(Frame{a, g.out_begin(a), 1.0, 1.0});

  PathSets out;
  std::size_t kept = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == g.out_end(f.node)) {
      on_path[f.node] = 0;
      stack.pop_back();
      path_nodes.pop_back();
      if (!path_edges.empty()) path_edges.pop_back();
      continue;
    }
    const EdgeId e = f.next++;
    const Edge& ed = g.edge(e);
    const NodeId y = ed.dst;
    if (on_path[y]) continue;
    const double product = f.through * ed.weight;
    if (product < min_product) continue;
    const double step = out_log_sum[f.node] == 0.0 ? 1.0 / static_cast<double>(g.out_degree(f.node))
                                                   : log_complement(ed.weight) / out_log_sum[f.node];
    const double fan = f.fan * step;
    if (fan < params.t2) continue;

    const double through = product * g.node_weight(y);
    const double parent_fan = fan;
    path_nodes.push_back(y);
    path_edges.push_back(e);

    if (wanted.empty() || wanted[y]) {
      if (++kept > params.max_paths_per_source)
        throw Error(ErrorCode::kBudgetExceeded,
                    "more than " + std::to_string(params.max_paths_per_source) + " paths from '" + g.name(a) + "'");
      MinimalPath p;
      p.nodes = path_nodes;
      p.edges = path_edges;
      p.product = product;
      p.nominal = nominal_from_product(product);
      out[y].push_back(std::move(p));
    }

    if (through >= min_product && g.out_degree(y) > 0) {
      on_path[y] = 1;
      stack.push_back(Frame{y, g.out_begin(y), through, parent_fan});
    } else {
      path_nodes.pop_back();
      path_edges.pop_back();
    }
  }

  // A simple-path DFS reaches each node sequence once, so lists hold no duplicates.
  for (auto& [target, list] : out) std::sort(list.begin(), list.end(), path_order);
  return out;
}

BestPathTree::BestPathTree(const WeightedGraph& g, NodeId a) : g_(&g), source_(a) {
  if (a >= g.node_count()) throw Error(ErrorCode::kInvalidArgument, "source out of range");
  const std::size_t n = g.node_count();
  std::vector<double> cost(n, std::numeric_limits<double>::infinity());
  parent_edge_.assign(n, kNoEdge);
  std::vector<char> done(n, 0);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  cost[a] = 0.0;
  heap.emplace(0.0, a);
  while (!heap.empty()) {
    const auto [c, x] = heap.top();
    heap.pop();
    if (done[x]) continue;
    done[x] = 1;
    const double leave = x == a ? 0.0 : -std::log(g.node_weight(x));
    for (EdgeId e = g.out_begin(x); e < g.out_end(x); ++e) {
      const NodeId y = g.edge(e).dst;
      if (y == a || done[y]) continue;
      const double next = c + leave - std::log(g.edge_weight(e));
      if (next < cost[y]) {
        cost[y] = next;
        parent_edge_[y] = e;
        heap.emplace(next, y);
      }
    }
  }
}

MinimalPath BestPathTree::path_to(NodeId b) const {
  if (b >= g_->node_count()) throw Error(ErrorCode::kInvalidArgument, "target out of range");
  if (b == source_ || !reachable(b))
    throw Error(ErrorCode::kUnreachable, "'" + g_->name(b) + "' is not reachable from '" + g_->name(source_) + "'");
  std::vector<NodeId> nodes{b};
  for (NodeId v = b; v != source_;) {
    v = g_->edge(parent_edge_[v]).src;
    nodes.push_back(v);
  }
  std::reverse(nodes.begin(), nodes.end());
  return make_path(*g_, std::move(nodes));
}

MinimalPath best_single_path(const WeightedGraph& g, NodeId a, NodeId b) { return BestPathTree(g, a).path_to(b); }

}  // namespace blink

#include "blink/exact.hpp"

#include "blink/error.hpp"
#include "blink/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace blink {

double score_from_probability(double b) noexcept { return -std::log1p(-std::min(b, kMaxReliability)); }

namespace {

struct Arc {
  int u;
  int v;
  double p;
};

// Two-terminal network over small integer node ids.
struct Net {
  int n = 0;
  int s = 0;
  int t = 0;
  std::vector<Arc> arcs;
};

void merge_parallel_arcs(std::vector<Arc>& arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.u != y.u ? x.u < y.u : x.v < y.v; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (w > 0 && arcs[w - 1].u == arcs[i].u && arcs[w - 1].v == arcs[i].v)
      arcs[w - 1].p = merge_parallel(arcs[w - 1].p, arcs[i].p);
    else
      arcs[w++] = arcs[i];
  }
  arcs.resize(w);
}

// Drops arcs that cannot lie on an s->t path. Returns false when t is cut off.
bool prune_dead(Net& net) {
  std::vector<std::vector<int>> fwd(net.n), bwd(net.n);
  for (const Arc& a : net.arcs) {
    fwd[a.u].push_back(a.v);
    bwd[a.v].push_back(a.u);
  }
  auto flood = [&](int start, const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(net.n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    return seen;
  };
  const auto from_s = flood(net.s, fwd);
  if (!from_s[net.t]) return false;
  const auto to_t = flood(net.t, bwd);
  std::erase_if(net.arcs, [&](const Arc& a) { return !from_s[a.u] || !to_t[a.v]; });
  return true;
}

// Applies measure-preserving reductions to a fixpoint. Returns false when t
// is unreachable.
bool reduce(Net& net) {
  while (true) {
    std::erase_if(net.arcs, [&](const Arc& a) { return a.u == a.v || a.v == net.s || a.u == net.t; });
    merge_parallel_arcs(net.arcs);
    if (!prune_dead(net)) return false;

    std::vector<int> indeg(net.n, 0), outdeg(net.n, 0);
    for (const Arc& a : net.arcs) {
      ++outdeg[a.u];
      ++indeg[a.v];
    }
    bool changed = false;
    for (int x = 0; x < net.n && !changed; ++x) {
      if (x == net.s || x == net.t || indeg[x] != 1 || outdeg[x] != 1) continue;
      std::size_t in_i = 0, out_i = 0;
      for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        if (net.arcs[i].v == x) in_i = i;
        if (net.arcs[i].u == x) out_i = i;
      }
      const Arc joined{net.arcs[in_i].u, net.arcs[out_i].v, net.arcs[in_i].p * net.arcs[out_i].p};
      net.arcs[in_i] = joined;
      net.arcs.erase(net.arcs.begin() + static_cast<std::ptrdiff_t>(out_i));
      changed = true;
    }
    if (!changed) return true;
  }
}

double factor(Net net) {
  if (!reduce(net)) return 0.0;
  if (net.arcs.size() == 1) return net.arcs[0].p;

  // A direct s->t arc: b = p + (1-p) * b(without it).
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (net.arcs[i].u == net.s && net.arcs[i].v == net.t) {
      const double p = net.arcs[i].p;
      if (p >= 1.0) return 1.0;
      net.arcs.erase(net.arcs.begin() + static_cast<std::ptrdiff_t>(i));
      return p + (1.0 - p) * factor(std::move(net));
    }
  }

  // Pivot on the source arc whose weight is closest to 0.5.
  std::size_t pivot = net.arcs.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (net.arcs[i].u != net.s) continue;
    const double d = std::abs(net.arcs[i].p - 0.5);
    if (d < best) {
      best = d;
      pivot = i;
    }
  }
  const Arc arc = net.arcs[pivot];

  Net absent = net;
  absent.arcs.erase(absent.arcs.begin() + static_cast<std::ptrdiff_t>(pivot));
  const double p_absent = factor(std::move(absent));

  // Present: the head joins the source.
  Net present = std::move(net);
  present.arcs.erase(present.arcs.begin() + static_cast<std::ptrdiff_t>(pivot));
  for (Arc& a : present.arcs) {
    if (a.u == arc.v) a.u = present.s;
    if (a.v == arc.v) a.v = present.s;
  }
  const double p_present = factor(std::move(present));
  return arc.p * p_present + (1.0 - arc.p) * p_absent;
}

}  // namespace

double exact_reachability(const WeightedGraph& g, NodeId a, NodeId b, const ExactOptions& opt) {
  if (a >= g.node_count() || b >= g.node_count()) throw Error(ErrorCode::kInvalidArgument, "node out of range");
  if (a == b) return 1.0;
  const SplitResult split = split_node_weights(g);
  Net net;
  net.n = static_cast<int>(split.graph.node_count());
  net.s = static_cast<int>(split.out_node[a]);
  net.t = static_cast<int>(split.in_node[b]);
  for (const Edge& e : split.graph.edges())
    net.arcs.push_back(Arc{static_cast<int>(e.src), static_cast<int>(e.dst), e.weight});
  if (!reduce(net)) return 0.0;
  if (net.arcs.size() > opt.max_arcs)
    throw Error(ErrorCode::kCapExceeded, std::to_string(net.arcs.size()) + " arcs after reduction exceed the cap of " +
                                             std::to_string(opt.max_arcs));
  return std::clamp(factor(std::move(net)), 0.0, 1.0);
}

double exact_blink_score(const WeightedGraph& g, NodeId a, NodeId b, const ExactOptions& opt) {
  return score_from_probability(exact_reachability(g, a, b, opt));
}

double blink_distance(const WeightedGraph& g, NodeId a, NodeId b, const ExactOptions& opt) {
  const double p = exact_reachability(g, a, b, opt);
  if (p <= 0.0) return std::numeric_limits<double>::infinity();
  return -std::log(p);
}

double exact_event_probability(const WeightedGraph& g, const BlinkEvent& ev, std::size_t max_edges) {
  if (ev.sources.empty() || ev.targets.empty())
    throw Error(ErrorCode::kInvalidArgument, "event needs nonempty source and target sets");
  if (ev.kind != BlinkEvent::Kind::kAnyToAll && (ev.sources.size() != 1 || ev.targets.size() != 1))
    throw Error(ErrorCode::kInvalidArgument, "single-pair event needs exactly one source and one target");
  auto check = [&](NodeId v) {
    if (v >= g.node_count()) throw Error(ErrorCode::kInvalidArgument, "event node out of range");
  };
  for (NodeId v : ev.sources) check(v);
  for (NodeId v : ev.targets) check(v);
  if (ev.kind == BlinkEvent::Kind::kReachAndAvoid) check(ev.avoid);

  const SplitResult split = split_node_weights(g);
  const WeightedGraph& h = split.graph;
  const std::size_t m = h.edge_count();
  if (m > max_edges)
    throw Error(ErrorCode::kCapExceeded,
                std::to_string(m) + " edges exceed the enumeration cap of " + std::to_string(max_edges));

  std::vector<NodeId> starts;
  // A source counts as reached by itself, on both halves of a split node.
  for (NodeId v : ev.sources) {
    starts.push_back(split.out_node[v]);
    starts.push_back(split.in_node[v]);
  }
  std::vector<NodeId> goals;
  for (NodeId v : ev.targets) goals.push_back(split.in_node[v]);
  const NodeId avoid = ev.kind == BlinkEvent::Kind::kReachAndAvoid ? split.in_node[ev.avoid] : kNoNode;

  std::vector<char> seen(h.node_count());
  std::vector<NodeId> stack;
  double total = 0.0;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << m); ++state) {
    double p = 1.0;
    for (EdgeId e = 0; e < m; ++e) p *= (state >> e & 1) ? h.edge_weight(e) : 1.0 - h.edge_weight(e);
    if (p == 0.0) continue;
    std::fill(seen.begin(), seen.end(), 0);
    stack.clear();
    for (NodeId s : starts)
      if (!seen[s]) {
        seen[s] = 1;
        stack.push_back(s);
      }
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      for (EdgeId e = h.out_begin(x); e < h.out_end(x); ++e) {
        const NodeId y = h.edge(e).dst;
        if ((state >> e & 1) && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    bool hit = std::all_of(goals.begin(), goals.end(), [&](NodeId v) { return seen[v] != 0; });
    if (hit && avoid != kNoNode && seen[avoid]) hit = false;
    if (hit) total += p;
  }
  return std::clamp(total, 0.0, 1.0);
}

}  // namespace blink

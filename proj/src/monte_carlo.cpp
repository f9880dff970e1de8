#include "blink/monte_carlo.hpp"

#include "blink/error.hpp"
#include "blink/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

namespace blink {
namespace {

constexpr std::uint64_t mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Traversal scratch reused across samples; stamps avoid clearing per sample.
struct Walker {
  const WeightedGraph& g;
  std::uint64_t seed;
  std::vector<std::uint64_t> stamp;
  std::vector<std::uint32_t> dist;
  std::vector<NodeId> queue;
  std::uint64_t current = 0;

  Walker(const WeightedGraph& graph, std::uint64_t s) : g(graph), seed(s), stamp(graph.node_count(), 0) {}

  bool edge_up(std::uint64_t sample, EdgeId e) const {
    const Edge& ed = g.edge(e);
    return ed.weight >= 1.0 || blink_draw(seed, sample, edge_key(ed.src, ed.dst)) < ed.weight;
  }
  bool node_up(std::uint64_t sample, NodeId v) const {
    const double w = g.node_weight(v);
    return w >= 1.0 || blink_draw(seed, sample, node_key(v)) < w;
  }

  // BFS from a in instance `sample`. Stops early once `stop` is reached
  // (kNoNode: full traversal). Returns the hop distance to `stop`, or
  // max() if not reached. Reached nodes are those with stamp == current.
  std::uint32_t run(std::uint64_t sample, NodeId a, NodeId stop, bool want_dist) {
    ++current;
    if (want_dist && dist.size() != g.node_count()) dist.assign(g.node_count(), 0);
    queue.clear();
    queue.push_back(a);
    stamp[a] = current;
    if (want_dist) dist[a] = 0;
    if (a == stop) return 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId x = queue[head];
      for (EdgeId e = g.out_begin(x); e < g.out_end(x); ++e) {
        const NodeId y = g.edge(e).dst;
        if (stamp[y] == current || !edge_up(sample, e)) continue;
        stamp[y] = current;
        if (want_dist) dist[y] = dist[x] + 1;
        if (y == stop) return want_dist ? dist[y] : 1;
        // A reached node is expanded only when it exists itself.
        if (node_up(sample, y)) queue.push_back(y);
      }
    }
    return std::numeric_limits<std::uint32_t>::max();
  }
};

void check_nodes(const WeightedGraph& g, NodeId a, NodeId b) {
  if (a >= g.node_count() || b >= g.node_count()) throw Error(ErrorCode::kInvalidArgument, "node out of range");
}

}  // namespace

double blink_draw(std::uint64_t seed, std::uint64_t sample, std::uint64_t key) noexcept {
  const std::uint64_t h = mix(mix(mix(seed) ^ sample) ^ key);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::uint64_t edge_key(NodeId src, NodeId dst) noexcept {
  return (static_cast<std::uint64_t>(src) << 32 | dst) * 2 + 1;
}

std::uint64_t node_key(NodeId v) noexcept { return static_cast<std::uint64_t>(v) * 2; }

std::vector<NodeId> sample_reachable_set(const WeightedGraph& g, NodeId a, std::uint64_t seed, std::uint64_t sample) {
  check_nodes(g, a, a);
  Walker w(g, seed);
  w.run(sample, a, kNoNode, false);
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (w.stamp[v] == w.current) out.push_back(v);
  return out;
}

McEstimate mc_blink_estimate(const WeightedGraph& g, NodeId a, NodeId b, std::uint64_t n, std::uint64_t seed,
                             std::size_t threads) {
  check_nodes(g, a, b);
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "sample count must be positive");
  std::uint64_t hits = 0;
  std::mutex mu;
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    Walker w(g, seed);
    std::uint64_t local = 0;
    for (std::size_t i = begin; i < end; ++i)
      if (w.run(i, a, b, false) != std::numeric_limits<std::uint32_t>::max()) ++local;
    std::lock_guard lock(mu);
    hits += local;
  });
  McEstimate est;
  est.samples = n;
  est.hits = hits;
  est.mean = static_cast<double>(hits) / static_cast<double>(n);
  est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(n));
  return est;
}

double mc_erd(const WeightedGraph& g, NodeId a, NodeId b, std::uint64_t n, std::uint64_t seed, bool symmetric,
              std::size_t threads) {
  check_nodes(g, a, b);
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "sample count must be positive");
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::uint64_t connected = 0;
  std::uint64_t total_hops = 0;
  std::mutex mu;
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    Walker w(g, seed);
    std::uint64_t c = 0;
    std::uint64_t hops = 0;
    for (std::size_t i = begin; i < end; ++i) {
      std::uint32_t d = w.run(i, a, b, true);
      if (symmetric) d = std::min(d, w.run(i, b, a, true));
      if (d == kNone) continue;
      ++c;
      hops += d;
    }
    std::lock_guard lock(mu);
    connected += c;
    total_hops += hops;
  });
  if (connected == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(total_hops) / static_cast<double>(connected);
}

}  // namespace blink

#include "blink/error.hpp"
#include "blink/exact.hpp"

#include <algorithm>
#include <deque>

namespace blink {

double brute_force_reachability(const WeightedGraph& g, NodeId a, NodeId b, std::size_t max_elements) {
  if (a >= g.node_count() || b >= g.node_count()) throw Error(ErrorCode::kInvalidArgument, "node out of range");
  if (a == b) return 1.0;

  // Blinking elements: every edge, then every intermediate node with weight < 1.
  std::vector<NodeId> weighted_nodes;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (v != a && v != b && g.node_weight(v) < 1.0) weighted_nodes.push_back(v);
  const std::size_t m = g.edge_count();
  const std::size_t k = m + weighted_nodes.size();
  if (k > max_elements)
    throw Error(ErrorCode::kCapExceeded, std::to_string(k) + " blinking elements exceed the cap");

  std::vector<char> node_up(g.node_count());
  std::vector<char> seen(g.node_count());
  std::deque<NodeId> queue;
  double total = 0.0;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << k); ++state) {
    double p = 1.0;
    for (std::size_t i = 0; i < m; ++i) p *= (state >> i & 1) ? g.edge_weight(i) : 1.0 - g.edge_weight(i);
    std::fill(node_up.begin(), node_up.end(), 1);
    for (std::size_t j = 0; j < weighted_nodes.size(); ++j) {
      const bool up = state >> (m + j) & 1;
      const double w = g.node_weight(weighted_nodes[j]);
      p *= up ? w : 1.0 - w;
      node_up[weighted_nodes[j]] = up;
    }
    if (p == 0.0) continue;

    std::fill(seen.begin(), seen.end(), 0);
    queue.assign(1, a);
    seen[a] = 1;
    bool hit = false;
    while (!queue.empty() && !hit) {
      const NodeId x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < m; ++i) {
        const Edge& e = g.edge(static_cast<EdgeId>(i));
        if (e.src != x || !(state >> i & 1) || seen[e.dst]) continue;
        if (e.dst == b) {
          hit = true;
          break;
        }
        if (!node_up[e.dst]) continue;
        seen[e.dst] = 1;
        queue.push_back(e.dst);
      }
    }
    if (hit) total += p;
  }
  return total;
}

}  // namespace blink

#include "blink/transform.hpp"

#include "blink/error.hpp"

#include <map>
#include <set>

namespace blink {

WeightedGraph series_reduce(const WeightedGraph& g, std::span<const NodeId> preserve) {
  const std::size_t n = g.node_count();
  std::vector<char> keep(n, 0);
  for (NodeId v : preserve) keep.at(v) = 1;

  // Mutable adjacency keyed by (src, dst).
  std::map<std::pair<NodeId, NodeId>, double> edges;
  std::vector<std::set<NodeId>> out(n), in(n);
  for (const Edge& e : g.edges()) {
    edges[{e.src, e.dst}] = e.weight;
    out[e.src].insert(e.dst);
    in[e.dst].insert(e.src);
  }
  std::vector<char> alive(n, 1);

  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId y = 0; y < n; ++y) {
      if (!alive[y] || keep[y] || in[y].size() != 1 || out[y].size() != 1) continue;
      const NodeId x = *in[y].begin();
      const NodeId z = *out[y].begin();
      // A two-cycle X<->Y: Y has two incident edges but is not a series node.
      if (x == z) continue;
      const double w = edges[{x, y}] * g.node_weight(y) * edges[{y, z}];
      edges.erase({x, y});
      edges.erase({y, z});
      out[x].erase(y);
      in[z].erase(y);
      in[y].clear();
      out[y].clear();
      alive[y] = 0;
      auto [it, inserted] = edges.try_emplace({x, z}, w);
      if (!inserted) it->second = merge_parallel(it->second, w);
      out[x].insert(z);
      in[z].insert(x);
      changed = true;
    }
  }

  GraphBuilder b;
  for (NodeId v = 0; v < n; ++v)
    if (alive[v]) b.add_node(g.name(v), g.node_weight(v));
  for (const auto& [key, w] : edges) b.add_edge(g.name(key.first), g.name(key.second), w);
  return std::move(b).build();
}

SplitResult split_node_weights(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  GraphBuilder b;
  SplitResult r;
  r.in_node.resize(n);
  r.out_node.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    const bool split = g.node_weight(v) < 1.0 && g.in_degree(v) > 0 && g.out_degree(v) > 0;
    r.in_node[v] = b.add_node(g.name(v), 1.0);
    r.out_node[v] = split ? b.add_node(g.name(v) + "/out", 1.0) : r.in_node[v];
    if (split) b.add_edge(r.in_node[v], r.out_node[v], g.node_weight(v));
  }
  for (const Edge& e : g.edges()) b.add_edge(r.out_node[e.src], r.in_node[e.dst], e.weight);
  r.graph = std::move(b).build();
  return r;
}

WeightedGraph expand_hyperedges(std::span<const HyperedgeRecord> records) {
  GraphBuilder b;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    std::set<std::string> distinct(rec.members.begin(), rec.members.end());
    if (distinct.size() < 2)
      throw Error(ErrorCode::kInvalidArgument, "hyperedge " + std::to_string(i) + " has fewer than 2 members");
    for (const auto& m : rec.members) b.intern(m);
    const NodeId aux = b.add_node("~h" + std::to_string(i), rec.weight);
    for (const auto& m : distinct) {
      const NodeId v = b.intern(m);
      b.add_edge(v, aux, 1.0);
      b.add_edge(aux, v, 1.0);
    }
  }
  return std::move(b).build();
}

}  // namespace blink

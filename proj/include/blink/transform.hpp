#pragma once

#include "blink/graph.hpp"

#include <span>
#include <vector>

namespace blink {

/// Eliminates every node outside `preserve` whose only incident edges are
/// X->Y and Y->Z, replacing them with X->Z of weight w(X->Y) * w(Y) * w(Y->Z).
/// Parallel edges created along the way are merged; repeats to a fixpoint.
/// Surviving nodes keep their names (ids are renumbered).
WeightedGraph series_reduce(const WeightedGraph& g, std::span<const NodeId> preserve);

struct SplitResult {
  WeightedGraph graph;
  /// Node receiving the in-edges of each original node.
  std::vector<NodeId> in_node;
  /// Node emitting the out-edges of each original node.
  std::vector<NodeId> out_node;
};

/// Turns every node of weight < 1 into an in-node and an out-node joined by an
/// edge carrying the node weight. The in-node keeps the original name, the
/// out-node is named "<name>/out". A node lacking in-edges or out-edges can
/// only be a path endpoint, so it is kept whole with weight 1.
SplitResult split_node_weights(const WeightedGraph& g);

/// Each hyperedge becomes an auxiliary node "~h<index>" carrying the
/// hyperedge weight, with weight-1 edges to and from every member.
WeightedGraph expand_hyperedges(std::span<const HyperedgeRecord> records);

}  // namespace blink

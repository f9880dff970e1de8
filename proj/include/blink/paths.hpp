#pragma once

#include "blink/graph.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace blink {

/// A path from A to B without repeated nodes.
struct MinimalPath {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  /// Product of edge weights and intermediate node weights.
  double product = 0.0;
  /// Standalone score -ln(1 - product).
  double nominal = 0.0;

  std::size_t length() const noexcept { return edges.size(); }
  NodeId source() const { return nodes.front(); }
  NodeId target() const { return nodes.back(); }
};

struct PathFilterParams {
  /// Minimum nominal contribution of a retained path.
  double t1 = 1e-4;
  /// Minimum product of per-step fan-out factors.
  double t2 = 2e-6;
  std::size_t max_paths_per_source = 500000;
};

/// -ln(1 - prod(weights)), clamped like exact scores.
double nominal_contribution(std::span<const double> weights);
double nominal_from_product(double product) noexcept;

/// Builds a path from its node sequence; throws kInvalidArgument if an edge is
/// missing or a node repeats.
MinimalPath make_path(const WeightedGraph& g, std::vector<NodeId> nodes);

/// Fan-out factor of edge e: ln(1 - w_e) / sum over out-edges f of the same
/// source of ln(1 - w_f), with 1 - w floored at 1e-15.
double fanout_factor(const WeightedGraph& g, EdgeId e);

/// Paths per target, ordered by target id; each list sorted by descending
/// nominal and then by node sequence.
using PathSets = std::map<NodeId, std::vector<MinimalPath>>;

/// One depth-first traversal from A that records every surviving prefix as a
/// path to its last node. A prefix is dropped once its nominal or its fan-out
/// product can no longer reach t1 / t2. With `targets`, only paths ending in
/// a listed node are kept. Throws kBudgetExceeded when more than
/// max_paths_per_source paths would be kept.
PathSets enumerate_minimal_paths(const WeightedGraph& g, NodeId a, const PathFilterParams& params,
                                 std::optional<std::span<const NodeId>> targets = std::nullopt);

/// Single-source search for the largest-product path to every node, with edge
/// cost -ln w_e - ln w(node left), the source's own weight excluded.
class BestPathTree {
 public:
  BestPathTree(const WeightedGraph& g, NodeId a);

  bool reachable(NodeId b) const { return b == source_ || parent_edge_[b] != kNoEdge; }
  /// Throws kUnreachable.
  MinimalPath path_to(NodeId b) const;

 private:
  static constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);
  const WeightedGraph* g_;
  NodeId source_;
  std::vector<EdgeId> parent_edge_;
};

/// Largest-product A->B path; throws kUnreachable.
MinimalPath best_single_path(const WeightedGraph& g, NodeId a, NodeId b);

}  // namespace blink

#pragma once

#include "blink/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace blink {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
};

/// Uniform draw in [0, 1) for one element of one blink instance. The draw is
/// a pure function of (seed, sample, key), so sample i realizes the same
/// instance however and wherever it is evaluated.
double blink_draw(std::uint64_t seed, std::uint64_t sample, std::uint64_t key) noexcept;

/// Element keys. Edges are keyed by their endpoint ids, so graphs that share
/// node numbering share random numbers.
std::uint64_t edge_key(NodeId src, NodeId dst) noexcept;
std::uint64_t node_key(NodeId v) noexcept;

/// Nodes reachable from A in blink instance `sample`, sorted by id. A is always
/// included; a node is reached when an existing edge points at it, and only
/// nodes that themselves exist are expanded further.
std::vector<NodeId> sample_reachable_set(const WeightedGraph& g, NodeId a, std::uint64_t seed,
                                         std::uint64_t sample = 0);

/// Fraction of n instances in which B is reachable from A.
McEstimate mc_blink_estimate(const WeightedGraph& g, NodeId a, NodeId b, std::uint64_t n, std::uint64_t seed,
                             std::size_t threads = 1);

/// Mean hop distance A->B over the instances where B is reachable; with
/// `symmetric`, the shorter of A->B and B->A in the same instance.
/// Returns +infinity when no instance connects the pair.
double mc_erd(const WeightedGraph& g, NodeId a, NodeId b, std::uint64_t n, std::uint64_t seed, bool symmetric = false,
              std::size_t threads = 1);

}  // namespace blink

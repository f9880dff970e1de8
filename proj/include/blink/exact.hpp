#pragma once

#include "blink/graph.hpp"

#include <cstddef>
#include <vector>

namespace blink {

inline constexpr double kMaxReliability = 1.0 - 1e-15;

/// -ln(1 - b) with b clamped to at most 1 - 1e-15.
double score_from_probability(double b) noexcept;

struct ExactOptions {
  /// Largest arc count allowed after node splitting and reduction.
  std::size_t max_arcs = 25;
};

/// Probability that some A->B path exists when every edge and every node
/// blinks independently. Endpoints need not exist. Computed by factoring on
/// arcs leaving the source, with series/parallel/dead-end reduction at every
/// level. Throws kCapExceeded when the reduced graph is larger than the cap.
double exact_reachability(const WeightedGraph& g, NodeId a, NodeId b, const ExactOptions& opt = {});

double exact_blink_score(const WeightedGraph& g, NodeId a, NodeId b, const ExactOptions& opt = {});

/// -ln b(A,B); +infinity when B cannot be reached.
double blink_distance(const WeightedGraph& g, NodeId a, NodeId b, const ExactOptions& opt = {});

struct BlinkEvent {
  enum class Kind { kReach, kAnyToAll, kReachAndAvoid };
  Kind kind = Kind::kReach;
  /// kReach / kReachAndAvoid: sources = {A}, targets = {B}.
  std::vector<NodeId> sources;
  std::vector<NodeId> targets;
  /// kReachAndAvoid: the node C that must not be reachable from A.
  NodeId avoid = kNoNode;

  static BlinkEvent reach(NodeId a, NodeId b) { return {Kind::kReach, {a}, {b}, kNoNode}; }
  static BlinkEvent any_to_all(std::vector<NodeId> from, std::vector<NodeId> to) {
    return {Kind::kAnyToAll, std::move(from), std::move(to), kNoNode};
  }
  static BlinkEvent reach_and_avoid(NodeId a, NodeId b, NodeId c) { return {Kind::kReachAndAvoid, {a}, {b}, c}; }
};

/// Exact probability of a generalized event by enumerating every blink state
/// of the node-split graph. Throws kCapExceeded above `max_edges` edges.
double exact_event_probability(const WeightedGraph& g, const BlinkEvent& ev, std::size_t max_edges = 20);

/// Reference reachability by plain enumeration of all edge and intermediate
/// node states of `g`, sharing no code with the factoring engine.
/// Throws kCapExceeded when more than `max_elements` elements blink.
double brute_force_reachability(const WeightedGraph& g, NodeId a, NodeId b, std::size_t max_elements = 22);

}  // namespace blink

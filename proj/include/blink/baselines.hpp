#pragma once

#include "blink/graph.hpp"
#include "blink/score_table.hpp"

namespace blink {

/// Personalized PageRank from A: from node X restart to A with probability
/// alpha, otherwise follow an out-edge chosen proportionally to its weight.
/// Nodes without out-edges restart with probability 1. Node weights are not
/// used. Power iteration to an L1 change below 1e-12. The table holds every
/// node except A.
ScoreTable ppr_scores(const WeightedGraph& g, NodeId a, double alpha);

/// Full stationary vector, A included (sums to 1).
std::vector<double> ppr_vector(const WeightedGraph& g, NodeId a, double alpha);

/// Spectral radius of M with M_ij = w(i) * w(i->j), estimated by power
/// iteration on M + I with Collatz-Wielandt bounds.
double katz_spectral_radius(const WeightedGraph& g);

/// Walk-based Katz: sum over l >= 1 of beta^l times the total weight of
/// length-l walks A->B, a walk weighing the product of its edge weights and
/// of the weights of the nodes it passes through. Stops once the increment
/// falls below 1e-12 in max norm. Throws kDivergent when beta >= 1 / rho(M).
/// A non-negative `rho` skips the spectral estimate.
ScoreTable katz_scores(const WeightedGraph& g, NodeId a, double beta, double rho = -1.0);

/// sum over C of n(A->C) * n(C->B) / (ln max(d_in(C), 2) + ln max(d_out(C), 2)),
/// n counting edges. Only nodes with a nonzero score appear.
ScoreTable adamic_adar(const WeightedGraph& g, NodeId a);

/// Effective conductance between A and B treating each node pair as one
/// resistor whose conductance is the mean of the weights of the directed
/// edges present between them. Throws kUnreachable when A and B lie in
/// different components.
double effective_conductance(const WeightedGraph& g, NodeId a, NodeId b);

enum class EdgeLength {
  /// Each edge costs 1 / w.
  kInverseWeight,
  /// Each edge costs w (proximity 1 / (2w) for a length-2 path of weight w).
  kWeight,
};

/// Reciprocal of the least total edge length from A to B. Throws kUnreachable.
double weighted_shortest_path(const WeightedGraph& g, NodeId a, NodeId b,
                              EdgeLength length = EdgeLength::kInverseWeight);

enum class SymmetricRule { kMax, kMin, kSum, kProductB };

/// Combines the A->B and B->A values. kProductB takes reachability
/// probabilities and returns -ln(1 - b_ab * b_ba).
double symmetric_combine(double ab, double ba, SymmetricRule rule);

}  // namespace blink

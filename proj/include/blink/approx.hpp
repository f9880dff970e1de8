#pragma once

#include "blink/chain.hpp"
#include "blink/exact.hpp"
#include "blink/graph.hpp"
#include "blink/paths.hpp"
#include "blink/score_table.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace blink {

enum class Variation { kHigh, kMedium, kLow };

struct ApproxParams {
  PathFilterParams filter;
  int max_iterations = 100;
  /// Stop once max |s_next - s| / max(s, 1e-12) over paths drops below this.
  double tolerance = 1e-9;
  /// Sampling budget for high-variation subgraphs beyond the exact cap.
  std::uint64_t mc_samples = 100000;
  std::uint64_t seed = 1;
  ExactOptions exact;
  /// When > 0, rerank the best `hybrid_top_k` targets with the high variation.
  std::size_t hybrid_top_k = 0;
  std::size_t threads = 1;
};

/// Per-path contribution estimates for one (A, B) pair.
struct PathContributionState {
  std::vector<MinimalPath> paths;
  std::vector<double> s_hat;
  int iteration = 0;
  bool converged = false;

  double total() const noexcept;
};

PathContributionState initial_state(std::vector<MinimalPath> paths);

/// Blinking elements a path depends on: its edges (id = edge id) and its
/// intermediate nodes of weight < 1 (id = edge_count + node id), in path order.
std::vector<std::uint32_t> path_resources(const WeightedGraph& g, const MinimalPath& p);

/// Sum of current s_hat of the paths longer than 2 that use each resource.
using EdgeUsageTable = std::vector<std::pair<std::uint32_t, double>>;
EdgeUsageTable compute_edge_usage(const WeightedGraph& g, const PathContributionState& state);

/// One multiplicative update: s_next = s * (sg - len2_sum) / denom, clamped to
/// [0, nominal]. Paths of length <= 2 and paths with denom <= 0 are left
/// alone. Throws kNumeric when sg falls below len2_sum by more than rounding.
void update_step(PathContributionState& state, std::span<const double> sg, std::span<const double> len2_sum,
                 std::span<const double> denom);

/// Union of path i and every path in `all` sharing a resource with it. Node
/// names are kept.
WeightedGraph select_subgraph_high(const WeightedGraph& g, const MinimalPath& path_i,
                                   std::span<const MinimalPath> all);

/// Score of A->B in a subgraph: exact when the reduced graph fits the cap,
/// otherwise sampled with the given budget and seed.
struct SubgraphScore {
  double score;
  bool exact;
};
SubgraphScore eval_subgraph_score(const WeightedGraph& sub, NodeId a, NodeId b, std::uint64_t samples,
                                  std::uint64_t seed, const ExactOptions& opt = {});

struct HypotheticalResult {
  /// Score of the surrogate subgraph.
  double score = 0.0;
  /// Nominal sum of the length-2 paths through the first or last interior node.
  double len2_sum = 0.0;
  /// Largest usage on the path.
  double denom = 0.0;
  std::vector<HypotheticalEdge> bypasses;
  std::size_t ops = 0;
};

/// `usage(resource id)` must be positive for every resource of the path.
using UsageLookup = std::function<double(std::uint32_t)>;
HypotheticalResult build_hypothetical_medium(const WeightedGraph& g, const MinimalPath& path_i,
                                             const UsageLookup& usage);
HypotheticalResult build_hypothetical_low(const WeightedGraph& g, const MinimalPath& path_i,
                                          const UsageLookup& usage);

using IterationObserver = std::function<void(const PathContributionState&)>;

/// Iterates update_step to convergence for one pair. `observer` sees the
/// initial state and the state after every iteration.
PathContributionState refine_contributions(const WeightedGraph& g, std::vector<MinimalPath> paths, Variation v,
                                           const ApproxParams& params, const IterationObserver& observer = {});

/// Approximate blink scores from A. Targets default to every node reachable
/// from A. Targets without a qualifying path score the nominal of their best
/// single path; unreachable targets score 0.
ScoreTable approx_blink(const WeightedGraph& g, NodeId a, std::optional<std::span<const NodeId>> targets,
                        Variation v, const ApproxParams& params = {});

/// Score of one pair using every path that passes the filters.
double approx_blink_pair(const WeightedGraph& g, NodeId a, NodeId b, Variation v, const ApproxParams& params = {});

}  // namespace blink

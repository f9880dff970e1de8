#pragma once

#include "blink/config.hpp"
#include "blink/graph.hpp"
#include "blink/graph_io.hpp"
#include "blink/weighting.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace blink {

/// One source node to predict new links for.
struct PredictionTask {
  NodeId source = kNoNode;
  /// New targets in the test period, sorted.
  std::vector<NodeId> truth;
  /// The source and its training neighbors, sorted; never ranked.
  std::vector<NodeId> excluded;
};

/// Training graph topology plus the tasks derived from the test period.
struct Dataset {
  RawGraph raw;
  /// Paper nodes of an author/paper graph.
  std::vector<char> is_paper;
  /// Nodes that may appear in a ranking (regular nodes, core nodes when the
  /// core rule is on).
  std::vector<char> eligible;
  std::vector<PredictionTask> tasks;
  /// Test-period names with no training counterpart after mapping.
  std::vector<std::string> unmapped;
  bool undirected = false;
};

/// Raw contents of one period: pairwise edges or hyperedges.
struct PeriodData {
  std::vector<EdgeLine> edges;
  std::vector<HyperedgeRecord> hyperedges;
};

/// Builds the training graph per cfg.format / cfg.knowledge and derives one
/// task per qualifying source. `mapping` renames test-period names to
/// training names before matching.
Dataset build_temporal_dataset(const PeriodData& train, const PeriodData& test, const std::vector<NodeLine>& nodes,
                               const std::map<std::string, std::string>& mapping, const HarnessConfig& cfg);

/// Reads the files named in cfg. Throws kParse with the file and line number.
Dataset load_temporal_dataset(const HarnessConfig& cfg);

/// Tab-separated `train_name<TAB>test_name` lines; returns test -> train.
std::map<std::string, std::string> read_mapping_file(const std::string& path);

// Ranking metrics.

/// Fraction of truth items among the first |truth| ranked items.
template <typename T>
double topk_precision(const std::vector<T>& ranked, const std::set<T>& truth) {
  if (truth.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < ranked.size() && i < truth.size(); ++i) hits += truth.count(ranked[i]);
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

/// Mean over truth items of the precision at the rank where each is found;
/// truth items never ranked contribute 0.
double average_precision(const std::vector<NodeId>& ranked, const std::set<NodeId>& truth);

struct RankedTask {
  std::vector<NodeId> ranked;
  std::set<NodeId> truth;
};

double mean_average_precision(const std::vector<RankedTask>& tasks);

struct RocPoint {
  std::size_t predictions;
  double true_positive_rate;
};

/// Cumulative true-positive rate when every task predicts its top r items,
/// for r = 1, 2, ...; `predictions` counts predictions over all tasks.
/// Stops after `max_predictions` predictions (0: no limit).
std::vector<RocPoint> roc_points(const std::vector<RankedTask>& tasks, std::size_t max_predictions = 0);

// Evaluation.

struct TaskOutcome {
  NodeId source;
  std::size_t truth;
  std::size_t hits;
  std::size_t candidates;
  double average_precision;
};

struct EvaluationReport {
  std::vector<TaskOutcome> tasks;
  /// Sum of top-|truth| hits over sum of |truth|.
  double precision = 0.0;
  /// Expected `precision` of a uniformly random ranking.
  double random_precision = 0.0;
  /// Top-|E_new| precision over all (source, target) pairs merged.
  double global_precision = 0.0;
  double map = 0.0;
  std::vector<RocPoint> roc;
  /// The value of cfg.metric.
  double metric = 0.0;
};

/// cfg with the values of a grid point substituted.
HarnessConfig with_point(const HarnessConfig& cfg, const ParamPoint& point);

/// Weighted training graph for cfg's measure, scheme and knowledge.
WeightedGraph weigh_dataset(const Dataset& ds, const HarnessConfig& cfg);

/// Ranked candidates of one task: higher scores first, in-degree and node id
/// breaking ties. Candidates beyond cfg.max_hops score 0.
std::vector<std::pair<NodeId, double>> rank_task(const WeightedGraph& g, const Dataset& ds, const PredictionTask& task,
                                                 const HarnessConfig& cfg);

/// Scores the given tasks (all when `task_ids` is empty). Tasks run
/// concurrently on cfg.threads workers; results do not depend on it.
EvaluationReport evaluate(const Dataset& ds, const HarnessConfig& cfg, const std::vector<std::size_t>& task_ids = {});

/// Seeded split of task indices into (parameter-selection, evaluation) sets.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_tasks(std::size_t count, double train_fraction,
                                                                          std::uint64_t seed);

/// Grid from cfg.grid (a single point of the current values when empty).
std::vector<ParamPoint> config_grid(const HarnessConfig& cfg);

/// Evaluates cfg.metric at every grid point over `task_ids`.
GridResult scan(const Dataset& ds, const HarnessConfig& cfg, const std::vector<std::size_t>& task_ids);

struct PredictOutcome {
  ParamPoint chosen;
  std::vector<std::size_t> selection_tasks;
  std::vector<std::size_t> evaluation_tasks;
  EvaluationReport report;
};

/// Full run: optional grid search on the selection split, then evaluation.
PredictOutcome predict(const Dataset& ds, const HarnessConfig& cfg);

/// Formats a value with 12 significant digits.
std::string format_value(double v);

void write_tasks_csv(std::ostream& out, const Dataset& ds, const EvaluationReport& r);
void write_roc_csv(std::ostream& out, const std::vector<RocPoint>& roc);
void write_summary_csv(std::ostream& out, const HarnessConfig& cfg, const PredictOutcome& p);
void write_scan_csv(std::ostream& out, const GridResult& r);

}  // namespace blink

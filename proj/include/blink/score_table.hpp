#pragma once

#include "blink/graph.hpp"

#include <optional>
#include <vector>

namespace blink {

struct ScoreEntry {
  NodeId node;
  double score;
};

/// Scores of target nodes seen from one source, held in rank order:
/// descending score, then descending in-degree, then ascending node id.
struct ScoreTable {
  NodeId source = kNoNode;
  std::vector<ScoreEntry> entries;

  std::optional<double> score_of(NodeId v) const;
  /// 0-based rank, or nullopt when absent.
  std::optional<std::size_t> rank_of(NodeId v) const;
  std::size_t size() const noexcept { return entries.size(); }
};

/// The shared tie-break rule: true when x ranks before y.
bool ranks_before(const WeightedGraph& g, const ScoreEntry& x, const ScoreEntry& y) noexcept;

/// Sorts entries into rank order.
ScoreTable make_score_table(const WeightedGraph& g, NodeId source, std::vector<ScoreEntry> entries);

}  // namespace blink

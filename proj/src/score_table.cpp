#include "blink/score_table.hpp"

#include <algorithm>

namespace blink {

std::optional<double> ScoreTable::score_of(NodeId v) const {
  for (const auto& e : entries)
    if (e.node == v) return e.score;
  return std::nullopt;
}

std::optional<std::size_t> ScoreTable::rank_of(NodeId v) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].node == v) return i;
  return std::nullopt;
}

bool ranks_before(const WeightedGraph& g, const ScoreEntry& x, const ScoreEntry& y) noexcept {
  if (x.score != y.score) return x.score > y.score;
  const std::size_t dx = g.in_degree(x.node);
  const std::size_t dy = g.in_degree(y.node);
  if (dx != dy) return dx > dy;
  return x.node < y.node;
}

ScoreTable make_score_table(const WeightedGraph& g, NodeId source, std::vector<ScoreEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [&](const ScoreEntry& x, const ScoreEntry& y) { return ranks_before(g, x, y); });
  return ScoreTable{source, std::move(entries)};
}

}  // namespace blink

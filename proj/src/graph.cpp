#include "blink/graph.hpp"

#include "blink/error.hpp"

#include <algorithm>
#include <cmath>

namespace blink {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
    case ErrorCode::kParse:
      return "PARSE";
    case ErrorCode::kCapExceeded:
      return "CAP_EXCEEDED";
    case ErrorCode::kBudgetExceeded:
      return "BUDGET_EXCEEDED";
    case ErrorCode::kUnreachable:
      return "UNREACHABLE";
    case ErrorCode::kDivergent:
      return "DIVERGENT";
    case ErrorCode::kDegenerate:
      return "DEGENERATE";
    case ErrorCode::kNumeric:
      return "NUMERIC";
    case ErrorCode::kRange:
      return "RANGE";
  }
  return "UNKNOWN";
}

double merge_parallel(double w1, double w2) noexcept { return 1.0 - (1.0 - w1) * (1.0 - w2); }

void check_probability(double w, std::string_view what) {
  if (!(w > 0.0 && w <= 1.0))
    throw Error(ErrorCode::kRange, std::string(what) + " weight must lie in (0, 1], got " + std::to_string(w));
}

std::optional<EdgeId> WeightedGraph::find_edge(NodeId src, NodeId dst) const {
  const auto first = edges_.begin() + out_offsets_[src];
  const auto last = edges_.begin() + out_offsets_[src + 1];
  auto it = std::lower_bound(first, last, dst, [](const Edge& e, NodeId d) { return e.dst < d; });
  if (it == last || it->dst != dst) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::optional<NodeId> WeightedGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId WeightedGraph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorCode::kInvalidArgument, "unknown node '" + std::string(name) + "'");
}

NodeId GraphBuilder::intern(std::string_view name) {
  auto [it, inserted] = index_.try_emplace(std::string(name), static_cast<NodeId>(names_.size()));
  if (inserted) {
    names_.emplace_back(name);
    node_weights_.push_back(1.0);
  }
  return it->second;
}

NodeId GraphBuilder::add_node(std::string_view name, double weight) {
  check_probability(weight, "node");
  const NodeId v = intern(name);
  node_weights_[v] = weight;
  return v;
}

void GraphBuilder::set_node_weight(NodeId v, double weight) {
  check_probability(weight, "node");
  node_weights_.at(v) = weight;
}

void GraphBuilder::add_edge(NodeId src, NodeId dst, double weight) {
  check_probability(weight, "edge");
  if (src >= names_.size() || dst >= names_.size())
    throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
  if (src == dst) throw Error(ErrorCode::kInvalidArgument, "self-loop on '" + names_[src] + "'");
  const std::uint64_t key = (static_cast<std::uint64_t>(src) << 32) | dst;
  auto [it, inserted] = edges_.try_emplace(key, weight);
  if (!inserted) it->second = merge_parallel(it->second, weight);
}

void GraphBuilder::add_edge(std::string_view src, std::string_view dst, double weight) {
  const NodeId s = intern(src);
  const NodeId d = intern(dst);
  add_edge(s, d, weight);
}

void GraphBuilder::add_undirected_edge(NodeId a, NodeId b, double weight) {
  add_edge(a, b, weight);
  add_edge(b, a, weight);
}

WeightedGraph GraphBuilder::build() const& {
  GraphBuilder copy = *this;
  return std::move(copy).build();
}

WeightedGraph GraphBuilder::build() && {
  WeightedGraph g;
  const std::size_t n = names_.size();
  g.edges_.reserve(edges_.size());
  for (const auto& [key, w] : edges_)
    g.edges_.push_back(Edge{static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffu), w});
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return a.src != b.src ? a.src < b.src : a.dst < b.dst; });

  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.out_offsets_[e.src + 1];
    ++g.in_offsets_[e.dst + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_offsets_[v + 1] += g.out_offsets_[v];
    g.in_offsets_[v + 1] += g.in_offsets_[v];
  }
  g.in_edge_ids_.resize(g.edges_.size());
  std::vector<EdgeId> fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  // Edges are sorted by source, so each in-list comes out sorted by source too.
  for (EdgeId e = 0; e < g.edges_.size(); ++e) g.in_edge_ids_[fill[g.edges_[e].dst]++] = e;

  g.names_ = std::move(names_);
  g.index_ = std::move(index_);
  g.node_weights_ = std::move(node_weights_);
  return g;
}

}  // namespace blink

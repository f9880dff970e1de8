#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace blink {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

struct Edge {
  NodeId src;
  NodeId dst;
  double weight;
};

/// Combined probability of two parallel edges: 1 - (1-w1)(1-w2).
double merge_parallel(double w1, double w2) noexcept;

/// Directed simple graph whose edges and nodes blink with their weights.
///
/// Immutable once built. Edges are stored sorted by (src, dst); an EdgeId is
/// the position in that order, so out-edge lists are contiguous and sorted by
/// destination. Node ids are dense and follow first-seen order of names.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  std::size_t node_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  double edge_weight(EdgeId e) const { return edges_[e].weight; }
  double node_weight(NodeId v) const { return node_weights_[v]; }
  std::span<const double> node_weights() const noexcept { return node_weights_; }

  /// Out-edges of v as a contiguous EdgeId range, sorted by destination.
  EdgeId out_begin(NodeId v) const { return out_offsets_[v]; }
  EdgeId out_end(NodeId v) const { return out_offsets_[v + 1]; }
  std::size_t out_degree(NodeId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }

  /// In-edges of v, sorted by source.
  std::span<const EdgeId> in_edges(NodeId v) const {
    return {in_edge_ids_.data() + in_offsets_[v], in_edge_ids_.data() + in_offsets_[v + 1]};
  }
  std::size_t in_degree(NodeId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  std::optional<EdgeId> find_edge(NodeId src, NodeId dst) const;

  const std::string& name(NodeId v) const { return names_[v]; }
  std::optional<NodeId> find(std::string_view name) const;
  /// Like find() but throws kInvalidArgument for unknown names.
  NodeId id(std::string_view name) const;

 private:
  friend class GraphBuilder;

  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<double> node_weights_;
  std::vector<Edge> edges_;
  std::vector<EdgeId> out_offsets_;
  std::vector<EdgeId> in_offsets_;
  std::vector<EdgeId> in_edge_ids_;
};

/// Accumulates nodes and edges, merging parallel edges on the fly.
///
/// Rejects self-loops and weights outside (0, 1]. Node names are interned;
/// an edge endpoint that has not been added yet is created with weight 1.
class GraphBuilder {
 public:
  NodeId add_node(std::string_view name, double weight = 1.0);
  void set_node_weight(NodeId v, double weight);
  NodeId intern(std::string_view name);

  void add_edge(NodeId src, NodeId dst, double weight);
  void add_edge(std::string_view src, std::string_view dst, double weight);
  /// Two directed edges sharing one weight.
  void add_undirected_edge(NodeId a, NodeId b, double weight);

  std::size_t node_count() const noexcept { return names_.size(); }

  WeightedGraph build() &&;
  WeightedGraph build() const&;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<double> node_weights_;
  std::unordered_map<std::uint64_t, double> edges_;
};

/// A hyperedge joining two or more nodes that blinks as a whole.
struct HyperedgeRecord {
  std::vector<std::string> members;
  double weight = 1.0;
};

void check_probability(double w, std::string_view what);

}  // namespace blink

#pragma once

#include "blink/graph.hpp"
#include "blink/graph_io.hpp"

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace blink {

enum class SchemeKind {
  /// w = 1 - (1 - b)^f
  kExponential,
  /// w = b * f
  kLinear,
  /// w = f; f is already a probability.
  kDirect,
};

struct WeightScheme {
  SchemeKind kind = SchemeKind::kExponential;
  /// Edge parameter.
  double b1 = 0.5;
  /// Node parameter.
  double b2 = 0.5;
};

/// Weight for one f value. f = infinity gives weight 1 under every scheme.
/// Throws kRange when the result leaves (0, 1].
double scheme_weight(SchemeKind kind, double b, double f);

enum class NodeKind { kRegular, kHyperedge };
enum class EdgeKind {
  kRegular,
  /// Fixed weight 1 (hyperedge membership links).
  kStructural,
};

/// Graph topology annotated with f values before weights are chosen.
/// Parallel edges are kept as separate entries; apply_weights merges them by
/// adding f values, which under the exponential scheme is the same as merging
/// their weights as parallel edges.
class RawGraph {
 public:
  static constexpr double kInfinite = std::numeric_limits<double>::infinity();

  NodeId intern(const std::string& name, NodeKind kind = NodeKind::kRegular);
  void set_node_f(NodeId v, double f);
  void add_edge(NodeId src, NodeId dst, double f, EdgeKind kind = EdgeKind::kRegular);

  std::size_t node_count() const noexcept { return names_.size(); }
  const std::string& name(NodeId v) const { return names_[v]; }
  NodeKind node_kind(NodeId v) const { return kinds_[v]; }
  double node_f(NodeId v) const { return node_f_[v]; }
  std::optional<NodeId> find(const std::string& name) const;

  struct RawEdge {
    NodeId src;
    NodeId dst;
    double f;
    EdgeKind kind;
  };
  const std::vector<RawEdge>& edges() const noexcept { return edges_; }
  std::vector<RawEdge>& edges() noexcept { return edges_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, NodeId> index_;
  std::vector<NodeKind> kinds_;
  std::vector<double> node_f_;
  std::vector<RawEdge> edges_;
};

/// Edge lines (f values) plus optional node lines; undirected adds both directions.
RawGraph raw_from_lines(const std::vector<EdgeLine>& edges, const std::vector<NodeLine>& nodes = {},
                        bool undirected = false);

/// Hyperedge lines: each record becomes a hyperedge node (f = record weight)
/// with structural links to and from its members.
RawGraph raw_from_hyperedges(const std::vector<HyperedgeRecord>& records);

/// Regular edges take b1, regular nodes b2, hyperedge nodes b1; structural
/// edges get weight 1. Nodes keep their ids and names.
WeightedGraph apply_weights(const RawGraph& raw, const WeightScheme& scheme);

/// Per-edge and per-node f values, indexed like RawGraph edges and nodes.
struct DomainKnowledge {
  std::vector<double> edge_f;
  std::vector<double> node_f;
  double gamma = 0.0;
};

/// Copies the f values of `k` into `raw`.
void apply_knowledge(RawGraph& raw, const DomainKnowledge& k);

/// Author/paper graph: f_E(X->Y) = 1 / max(1, log_gamma d_out(X)); paper
/// nodes get f = infinity; author nodes f = 1 / max(1, log_gamma m), m being
/// the author's number of distinct coauthors.
DomainKnowledge arxiv_knowledge(const RawGraph& raw, const std::vector<char>& is_paper, double gamma);

/// Citation graph: f_E(X->Y) = delta / (max(1, log_gamma i) * max(1, log_gamma d_in(Y)))
/// with i the 1-based position of the edge among X's out-edges in input order
/// and delta = 2 when Y->X also exists; f_V = 1 / (ln max(d_in, 2) + ln max(d_out, 2)).
DomainKnowledge wiki_knowledge(const RawGraph& raw, double gamma);

/// One grid point: parameter name -> value.
using ParamPoint = std::map<std::string, double>;

struct GridResult {
  ParamPoint best;
  double best_metric = 0.0;
  std::vector<std::pair<ParamPoint, double>> evaluated;
};

/// Cartesian product of per-parameter value lists, in lexicographic order.
std::vector<ParamPoint> expand_grid(const std::map<std::string, std::vector<double>>& axes);

/// Evaluates `metric` at every point (concurrently when threads > 1) and
/// returns the argmax; ties go to the lexicographically smallest point.
GridResult grid_search(const std::vector<ParamPoint>& grid, const std::function<double(const ParamPoint&)>& metric,
                       std::size_t threads = 1);

}  // namespace blink

#include "blink/weighting.hpp"

#include "blink/error.hpp"
#include "blink/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace blink {

double scheme_weight(SchemeKind kind, double b, double f) {
  if (!(f > 0.0)) throw Error(ErrorCode::kRange, "f values must be positive");
  if (std::isinf(f)) return 1.0;
  double w = 0.0;
  switch (kind) {
    case SchemeKind::kExponential:
      if (!(b > 0.0 && b <= 1.0)) throw Error(ErrorCode::kRange, "b must lie in (0, 1]");
      w = b >= 1.0 ? 1.0 : -std::expm1(f * std::log1p(-b));
      break;
    case SchemeKind::kLinear:
      if (!(b > 0.0 && b <= 1.0)) throw Error(ErrorCode::kRange, "b must lie in (0, 1]");
      w = b * f;
      break;
    case SchemeKind::kDirect:
      w = f;
      break;
  }
  if (!(w > 0.0 && w <= 1.0))
    throw Error(ErrorCode::kRange, "weight " + std::to_string(w) + " outside (0, 1] for f = " + std::to_string(f));
  return w;
}

NodeId RawGraph::intern(const std::string& name, NodeKind kind) {
  auto [it, inserted] = index_.try_emplace(name, static_cast<NodeId>(names_.size()));
  if (inserted) {
    names_.push_back(name);
    kinds_.push_back(kind);
    node_f_.push_back(1.0);
  }
  return it->second;
}

void RawGraph::set_node_f(NodeId v, double f) {
  if (!(f > 0.0)) throw Error(ErrorCode::kRange, "f values must be positive");
  node_f_.at(v) = f;
}

void RawGraph::add_edge(NodeId src, NodeId dst, double f, EdgeKind kind) {
  if (src >= names_.size() || dst >= names_.size()) throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
  if (src == dst) throw Error(ErrorCode::kInvalidArgument, "self-loop on '" + names_[src] + "'");
  if (!(f > 0.0)) throw Error(ErrorCode::kRange, "f values must be positive");
  edges_.push_back(RawEdge{src, dst, f, kind});
}

std::optional<NodeId> RawGraph::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RawGraph raw_from_lines(const std::vector<EdgeLine>& edges, const std::vector<NodeLine>& nodes, bool undirected) {
  RawGraph raw;
  for (const auto& e : edges) {
    const NodeId s = raw.intern(e.src);
    const NodeId d = raw.intern(e.dst);
    if (s == d) continue;
    raw.add_edge(s, d, e.value);
    if (undirected) raw.add_edge(d, s, e.value);
  }
  for (const auto& n : nodes) raw.set_node_f(raw.intern(n.name), n.value);
  return raw;
}

RawGraph raw_from_hyperedges(const std::vector<HyperedgeRecord>& records) {
  RawGraph raw;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    const std::set<std::string> members(rec.members.begin(), rec.members.end());
    if (members.size() < 2)
      throw Error(ErrorCode::kInvalidArgument, "hyperedge " + std::to_string(i) + " has fewer than 2 members");
    for (const auto& m : rec.members) raw.intern(m);
    const NodeId h = raw.intern("~h" + std::to_string(i), NodeKind::kHyperedge);
    raw.set_node_f(h, rec.weight);
    for (const auto& m : members) {
      const NodeId v = *raw.find(m);
      raw.add_edge(v, h, 1.0, EdgeKind::kStructural);
      raw.add_edge(h, v, 1.0, EdgeKind::kStructural);
    }
  }
  return raw;
}

WeightedGraph apply_weights(const RawGraph& raw, const WeightScheme& scheme) {
  GraphBuilder b;
  for (NodeId v = 0; v < raw.node_count(); ++v) {
    const double param = raw.node_kind(v) == NodeKind::kHyperedge ? scheme.b1 : scheme.b2;
    b.add_node(raw.name(v), scheme_weight(scheme.kind, param, raw.node_f(v)));
  }
  // Parallel raw edges combine by adding f (direct weights merge as parallel edges).
  std::map<std::pair<NodeId, NodeId>, double> merged;
  for (const auto& e : raw.edges()) {
    const double f = e.kind == EdgeKind::kStructural ? RawGraph::kInfinite : e.f;
    auto [it, inserted] = merged.try_emplace({e.src, e.dst}, f);
    if (inserted) continue;
    if (scheme.kind == SchemeKind::kDirect)
      it->second = std::isinf(f) || std::isinf(it->second) ? RawGraph::kInfinite : merge_parallel(it->second, f);
    else
      it->second += f;
  }
  for (const auto& [key, f] : merged) b.add_edge(key.first, key.second, scheme_weight(scheme.kind, scheme.b1, f));
  return std::move(b).build();
}

void apply_knowledge(RawGraph& raw, const DomainKnowledge& k) {
  if (k.edge_f.size() != raw.edges().size() || k.node_f.size() != raw.node_count())
    throw Error(ErrorCode::kInvalidArgument, "domain knowledge does not match the graph");
  for (std::size_t i = 0; i < k.edge_f.size(); ++i) {
    if (!(k.edge_f[i] > 0.0)) throw Error(ErrorCode::kRange, "f values must be positive");
    raw.edges()[i].f = k.edge_f[i];
  }
  for (NodeId v = 0; v < raw.node_count(); ++v) raw.set_node_f(v, k.node_f[v]);
}

namespace {

double log_base(double x, double gamma) { return std::log(x) / std::log(gamma); }

void check_gamma(double gamma) {
  if (!(gamma > 1.0)) throw Error(ErrorCode::kInvalidArgument, "gamma must exceed 1");
}

}  // namespace

DomainKnowledge arxiv_knowledge(const RawGraph& raw, const std::vector<char>& is_paper, double gamma) {
  check_gamma(gamma);
  const std::size_t n = raw.node_count();
  if (is_paper.size() != n) throw Error(ErrorCode::kInvalidArgument, "paper flags do not match the graph");
  std::vector<double> out_deg(n, 0.0);
  std::vector<std::vector<NodeId>> out(n);
  for (const auto& e : raw.edges()) {
    out_deg[e.src] += 1.0;
    out[e.src].push_back(e.dst);
  }
  DomainKnowledge k;
  k.gamma = gamma;
  for (const auto& e : raw.edges()) k.edge_f.push_back(1.0 / std::max(1.0, log_base(out_deg[e.src], gamma)));
  for (NodeId v = 0; v < n; ++v) {
    if (is_paper[v]) {
      k.node_f.push_back(RawGraph::kInfinite);
      continue;
    }
    // Coauthors: other authors two hops away through a paper.
    std::set<NodeId> coauthors;
    for (NodeId p : out[v])
      if (is_paper[p])
        for (NodeId w : out[p])
          if (w != v && !is_paper[w]) coauthors.insert(w);
    const double m = static_cast<double>(coauthors.size());
    k.node_f.push_back(1.0 / std::max(1.0, m > 0 ? log_base(m, gamma) : 0.0));
  }
  return k;
}

DomainKnowledge wiki_knowledge(const RawGraph& raw, double gamma) {
  check_gamma(gamma);
  const std::size_t n = raw.node_count();
  std::vector<double> in_deg(n, 0.0), out_deg(n, 0.0);
  std::set<std::pair<NodeId, NodeId>> present;
  for (const auto& e : raw.edges()) {
    in_deg[e.dst] += 1.0;
    out_deg[e.src] += 1.0;
    present.emplace(e.src, e.dst);
  }
  DomainKnowledge k;
  k.gamma = gamma;
  std::vector<double> position(n, 0.0);
  for (const auto& e : raw.edges()) {
    const double i = ++position[e.src];
    const double delta = present.count({e.dst, e.src}) ? 2.0 : 1.0;
    k.edge_f.push_back(delta / (std::max(1.0, log_base(i, gamma)) * std::max(1.0, log_base(in_deg[e.dst], gamma))));
  }
  for (NodeId v = 0; v < n; ++v)
    k.node_f.push_back(1.0 / (std::log(std::max(in_deg[v], 2.0)) + std::log(std::max(out_deg[v], 2.0))));
  return k;
}

std::vector<ParamPoint> expand_grid(const std::map<std::string, std::vector<double>>& axes) {
  std::vector<ParamPoint> out{ParamPoint{}};
  for (const auto& [name, values] : axes) {
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<ParamPoint> next;
    for (const auto& p : out)
      for (double v : sorted) {
        ParamPoint q = p;
        q[name] = v;
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GridResult grid_search(const std::vector<ParamPoint>& grid, const std::function<double(const ParamPoint&)>& metric,
                       std::size_t threads) {
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "empty parameter grid");
  std::vector<double> values(grid.size());
  parallel_for_each(grid.size(), threads, [&](std::size_t i) { values[i] = metric(grid[i]); });
  GridResult r;
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (values[i] > values[best] || (values[i] == values[best] && grid[i] < grid[best])) best = i;
  }
  r.best = grid[best];
  r.best_metric = values[best];
  for (std::size_t i = 0; i < grid.size(); ++i) r.evaluated.emplace_back(grid[i], values[i]);
  return r;
}

}  // namespace blink

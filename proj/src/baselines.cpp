#include "blink/baselines.hpp"

#include "blink/error.hpp"
#include "blink/exact.hpp"
#include "blink/simd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

namespace blink {
namespace {

void check_node(const WeightedGraph& g, NodeId v) {
  if (v >= g.node_count()) throw Error(ErrorCode::kInvalidArgument, "node out of range");
}

ScoreTable table_from_vector(const WeightedGraph& g, NodeId a, const std::vector<double>& x, bool keep_zero) {
  std::vector<ScoreEntry> entries;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (v != a && (keep_zero || x[v] != 0.0)) entries.push_back(ScoreEntry{v, x[v]});
  return make_score_table(g, a, std::move(entries));
}

// y = M^T x for M_ij = w(i) * w(i->j), i.e. y_j = sum_i x_i w(i) w(i->j).
void walk_step(const WeightedGraph& g, const std::vector<double>& x, std::vector<double>& y) {
  std::fill(y.begin(), y.end(), 0.0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (x[i] == 0.0) continue;
    const double xi = x[i] * g.node_weight(i);
    for (EdgeId e = g.out_begin(i); e < g.out_end(i); ++e) y[g.edge(e).dst] += xi * g.edge_weight(e);
  }
}

}  // namespace

std::vector<double> ppr_vector(const WeightedGraph& g, NodeId a, double alpha) {
  check_node(g, a);
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1)");
  const std::size_t n = g.node_count();
  std::vector<double> out_sum(n, 0.0);
  for (const Edge& e : g.edges()) out_sum[e.src] += e.weight;

  std::vector<double> pi(n, 0.0), next(n, 0.0);
  pi[a] = 1.0;
  for (int iter = 0; iter < 100000; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    double restart = 0.0;
    for (NodeId x = 0; x < n; ++x) {
      if (pi[x] == 0.0) continue;
      if (g.out_degree(x) == 0) {
        restart += pi[x];
        continue;
      }
      restart += alpha * pi[x];
      const double move = (1.0 - alpha) * pi[x] / out_sum[x];
      for (EdgeId e = g.out_begin(x); e < g.out_end(x); ++e) next[g.edge(e).dst] += move * g.edge_weight(e);
    }
    next[a] += restart;
    const double change = simd::l1_diff(next, pi);
    pi.swap(next);
    if (change < 1e-12) break;
  }
  return pi;
}

ScoreTable ppr_scores(const WeightedGraph& g, NodeId a, double alpha) {
  return table_from_vector(g, a, ppr_vector(g, a, alpha), true);
}

double katz_spectral_radius(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0 || g.edge_count() == 0) return 0.0;

  // rho(M) is the largest radius over strongly connected components, and each
  // component is irreducible, so power iteration converges on it.
  std::vector<std::uint32_t> comp(n, static_cast<std::uint32_t>(-1)), index(n, 0), low(n, 0);
  std::vector<char> on_stack(n, 0), visited(n, 0);
  std::vector<NodeId> stack;
  std::vector<std::pair<NodeId, EdgeId>> call;
  std::uint32_t counter = 0, comps = 0;
  for (NodeId root = 0; root < n; ++root) {
    if (visited[root]) continue;
    call.emplace_back(root, g.out_begin(root));
    visited[root] = 1;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < g.out_end(v)) {
        const NodeId w = g.edge(next++).dst;
        if (!visited[w]) {
          visited[w] = 1;
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, g.out_begin(w));
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const NodeId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comps;
        } while (w != done);
        ++comps;
      }
    }
  }

  std::vector<std::vector<NodeId>> members(comps);
  for (NodeId v = 0; v < n; ++v) members[comp[v]].push_back(v);
  std::vector<NodeId> local(n, 0);
  double rho = 0.0;
  for (const auto& nodes : members) {
    if (nodes.size() < 2) continue;  // no self-loops, so a single node has rho 0
    const std::size_t m = nodes.size();
    for (std::size_t i = 0; i < m; ++i) local[nodes[i]] = static_cast<NodeId>(i);
    const std::uint32_t c = comp[nodes[0]];
    // Power iteration on M_c + I with Collatz-Wielandt bounds; the shift
    // removes oscillation on periodic components.
    std::vector<double> x(m, 1.0), y(m);
    double lo = 0.0, hi = 0.0;
    for (int iter = 0; iter < 100000; ++iter) {
      for (std::size_t j = 0; j < m; ++j) y[j] = x[j];
      for (std::size_t i = 0; i < m; ++i) {
        const NodeId v = nodes[i];
        const double xi = x[i] * g.node_weight(v);
        for (EdgeId e = g.out_begin(v); e < g.out_end(v); ++e) {
          const NodeId w = g.edge(e).dst;
          if (comp[w] == c) y[local[w]] += xi * g.edge_weight(e);
        }
      }
      lo = std::numeric_limits<double>::infinity();
      hi = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const double r = y[i] / x[i];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      simd::scale(1.0 / simd::max_abs(y), y);
      x.swap(y);
      if (hi - lo <= 1e-12 * hi) break;
    }
    rho = std::max(rho, 0.5 * (lo + hi) - 1.0);
  }
  return rho;
}

ScoreTable katz_scores(const WeightedGraph& g, NodeId a, double beta, double rho) {
  check_node(g, a);
  if (!(beta > 0.0)) throw Error(ErrorCode::kInvalidArgument, "beta must be positive");
  if (rho < 0.0) rho = katz_spectral_radius(g);
  if (beta * rho >= 1.0)
    throw Error(ErrorCode::kDivergent,
                "beta " + std::to_string(beta) + " is not below 1/rho = " + std::to_string(rho > 0 ? 1.0 / rho : 0.0));
  const std::size_t n = g.node_count();
  std::vector<double> walk(n, 0.0), next(n, 0.0), total(n, 0.0);
  // Length-1 walks leave A without passing through A's own weight.
  for (EdgeId e = g.out_begin(a); e < g.out_end(a); ++e) walk[g.edge(e).dst] += beta * g.edge_weight(e);
  for (int len = 1; len < 1000000; ++len) {
    simd::axpy(1.0, walk, total);
    if (simd::max_abs(walk) < 1e-12) break;
    walk_step(g, walk, next);
    simd::scale(beta, next);
    walk.swap(next);
  }
  return table_from_vector(g, a, total, false);
}

ScoreTable adamic_adar(const WeightedGraph& g, NodeId a) {
  check_node(g, a);
  std::map<NodeId, double> score;
  for (EdgeId e = g.out_begin(a); e < g.out_end(a); ++e) {
    const NodeId c = g.edge(e).dst;
    const double denom = std::log(std::max<double>(static_cast<double>(g.in_degree(c)), 2.0)) +
                         std::log(std::max<double>(static_cast<double>(g.out_degree(c)), 2.0));
    for (EdgeId f = g.out_begin(c); f < g.out_end(c); ++f) {
      const NodeId b = g.edge(f).dst;
      if (b != a) score[b] += 1.0 / denom;
    }
  }
  std::vector<ScoreEntry> entries;
  for (const auto& [v, s] : score) entries.push_back(ScoreEntry{v, s});
  return make_score_table(g, a, std::move(entries));
}

double effective_conductance(const WeightedGraph& g, NodeId a, NodeId b) {
  check_node(g, a);
  check_node(g, b);
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "conductance needs two distinct nodes");
  const std::size_t n = g.node_count();

  // Undirected conductances: mean of the directed weights present.
  std::map<std::pair<NodeId, NodeId>, std::pair<double, int>> pairs;
  for (const Edge& e : g.edges()) {
    auto& slot = pairs[{std::min(e.src, e.dst), std::max(e.src, e.dst)}];
    slot.first += e.weight;
    slot.second += 1;
  }
  std::vector<std::vector<std::pair<NodeId, double>>> adj(n);
  for (const auto& [key, acc] : pairs) {
    const double c = acc.first / acc.second;
    adj[key.first].emplace_back(key.second, c);
    adj[key.second].emplace_back(key.first, c);
  }

  // Component of A.
  std::vector<char> comp(n, 0);
  std::vector<NodeId> stack{a};
  comp[a] = 1;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    for (const auto& [y, c] : adj[x])
      if (!comp[y]) {
        comp[y] = 1;
        stack.push_back(y);
      }
  }
  if (!comp[b]) throw Error(ErrorCode::kUnreachable, "nodes lie in different components");

  // Ground B, inject unit current at A, solve L v = e_A on the component by
  // Jacobi-preconditioned conjugate gradients; conductance = 1 / v_A.
  std::vector<NodeId> local(n, kNoNode);
  std::vector<NodeId> nodes;
  for (NodeId v = 0; v < n; ++v)
    if (comp[v] && v != b) {
      local[v] = static_cast<NodeId>(nodes.size());
      nodes.push_back(v);
    }
  const std::size_t m = nodes.size();
  std::vector<double> diag(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& [y, c] : adj[nodes[i]]) diag[i] += c;
  auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < m; ++i) {
      double acc = diag[i] * x[i];
      for (const auto& [nb, c] : adj[nodes[i]])
        if (local[nb] != kNoNode) acc -= c * x[local[nb]];
      y[i] = acc;
    }
  };
  std::vector<double> x(m, 0.0), r(m, 0.0), z(m), p(m), q(m);
  r[local[a]] = 1.0;
  for (std::size_t i = 0; i < m; ++i) z[i] = r[i] / diag[i];
  p = z;
  double rz = simd::dot(r, z);
  const double r0 = std::sqrt(simd::dot(r, r));
  for (std::size_t iter = 0; iter < 10 * m + 100; ++iter) {
    apply(p, q);
    const double alpha = rz / simd::dot(p, q);
    simd::axpy(alpha, p, x);
    simd::axpy(-alpha, q, r);
    if (std::sqrt(simd::dot(r, r)) <= 1e-12 * r0) break;
    for (std::size_t i = 0; i < m; ++i) z[i] = r[i] / diag[i];
    const double rz_next = simd::dot(r, z);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t i = 0; i < m; ++i) p[i] = z[i] + beta * p[i];
  }
  return 1.0 / x[local[a]];
}

double weighted_shortest_path(const WeightedGraph& g, NodeId a, NodeId b, EdgeLength length) {
  check_node(g, a);
  check_node(g, b);
  const std::size_t n = g.node_count();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[a] = 0.0;
  heap.emplace(0.0, a);
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    if (x == b) break;
    for (EdgeId e = g.out_begin(x); e < g.out_end(x); ++e) {
      const double w = g.edge_weight(e);
      const double step = length == EdgeLength::kInverseWeight ? 1.0 / w : w;
      const NodeId y = g.edge(e).dst;
      if (d + step < dist[y]) {
        dist[y] = d + step;
        heap.emplace(dist[y], y);
      }
    }
  }
  if (!std::isfinite(dist[b]) || a == b)
    throw Error(ErrorCode::kUnreachable, "no path from '" + g.name(a) + "' to '" + g.name(b) + "'");
  return 1.0 / dist[b];
}

double symmetric_combine(double ab, double ba, SymmetricRule rule) {
  switch (rule) {
    case SymmetricRule::kMax:
      return std::max(ab, ba);
    case SymmetricRule::kMin:
      return std::min(ab, ba);
    case SymmetricRule::kSum:
      return ab + ba;
    case SymmetricRule::kProductB:
      return score_from_probability(ab * ba);
  }
  return 0.0;
}

}  // namespace blink

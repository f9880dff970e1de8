#include "blink/synthetic.hpp"

#include "blink/error.hpp"
#include "blink/monte_carlo.hpp"

#include <set>

namespace blink {
namespace {

std::size_t draw_index(std::uint64_t seed, std::uint64_t sample, std::uint64_t key, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(blink_draw(seed, sample, key) * static_cast<double>(n)));
}

}  // namespace

WeightedGraph two_path_graph(double w) {
  GraphBuilder b;
  for (const char* name : {"A", "B", "X", "Y"}) b.add_node(name);
  for (const auto& [x, y] : {std::pair{"A", "X"}, {"X", "B"}, {"A", "Y"}, {"Y", "B"}})
    b.add_undirected_edge(b.intern(x), b.intern(y), w);
  return std::move(b).build();
}

WeightedGraph crossed_two_path_graph(double w) {
  GraphBuilder b;
  for (const char* name : {"A", "B", "X", "Y"}) b.add_node(name);
  for (const auto& [x, y] : {std::pair{"A", "X"}, {"X", "B"}, {"A", "Y"}, {"Y", "B"}, {"X", "Y"}})
    b.add_undirected_edge(b.intern(x), b.intern(y), w);
  return std::move(b).build();
}

WeightedGraph random_out_degree_graph(std::size_t n, std::size_t out_degree, double edge_weight, double node_weight,
                                      std::uint64_t seed) {
  if (out_degree >= n) throw Error(ErrorCode::kInvalidArgument, "out-degree must be below the node count");
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node("v" + std::to_string(i), node_weight);
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::size_t> picked;
    for (std::uint64_t k = 0; picked.size() < out_degree; ++k) {
      const std::size_t j = draw_index(seed, i, k, n);
      if (j != i) picked.insert(j);
    }
    for (std::size_t j : picked) b.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j), edge_weight);
  }
  return std::move(b).build();
}

PlantedBenchmark planted_benchmark(std::size_t total_nodes, std::size_t gadgets_per_kind, std::uint64_t seed) {
  // First kind: s -> m -> ta beats two disjoint s -> p -> q -> tb paths for
  // w below ~0.5437 (ta also ties the q nodes and wins on in-degree, fed by
  // shared filler nodes). Second kind: five s -> d -> e -> td paths beat two
  // s -> c -> tc paths for w above ~0.458.
  constexpr std::size_t kFillers = 4;
  constexpr std::size_t kFirstSize = 8;
  constexpr std::size_t kSecondSize = 15;
  const std::size_t used = kFillers + gadgets_per_kind * (kFirstSize + kSecondSize);
  if (used > total_nodes) throw Error(ErrorCode::kInvalidArgument, "too many gadgets for the node budget");

  PlantedBenchmark out;
  auto edge = [&](const std::string& x, const std::string& y) { out.train.push_back(EdgeLine{x, y, 1.0}); };
  for (std::size_t g = 0; g < gadgets_per_kind; ++g) {
    const std::string p = "g" + std::to_string(g) + "_";
    const std::string s = p + "s";
    edge(s, p + "m");
    edge(p + "m", p + "ta");
    for (const char* k : {"1", "2"}) {
      edge(s, p + "p" + k);
      edge(p + "p" + k, p + "q" + k);
      edge(p + "q" + k, p + "tb");
    }
    for (std::size_t f = 0; f < kFillers; ++f) edge("filler" + std::to_string(f), p + "ta");
    out.first_kind_sources.push_back(s);
    out.test.push_back(EdgeLine{s, p + "ta", 1.0});
  }
  for (std::size_t g = 0; g < gadgets_per_kind; ++g) {
    const std::string p = "h" + std::to_string(g) + "_";
    const std::string s = p + "s";
    for (int k = 0; k < 2; ++k) {
      edge(s, p + "c" + std::to_string(k));
      edge(p + "c" + std::to_string(k), p + "tc");
    }
    for (int k = 0; k < 5; ++k) {
      edge(s, p + "d" + std::to_string(k));
      edge(p + "d" + std::to_string(k), p + "e" + std::to_string(k));
      edge(p + "e" + std::to_string(k), p + "td");
    }
    out.second_kind_sources.push_back(s);
    out.test.push_back(EdgeLine{s, p + "td", 1.0});
  }
  const std::size_t noise = total_nodes - used;
  for (std::size_t i = 0; i < noise && noise > 2; ++i) {
    std::set<std::size_t> picked;
    for (std::uint64_t k = 0; picked.size() < 2; ++k) {
      const std::size_t j = draw_index(seed, i, k, noise);
      if (j != i) picked.insert(j);
    }
    for (std::size_t j : picked) edge("n" + std::to_string(i), "n" + std::to_string(j));
  }
  // The test period repeats the training edges and adds the planted ones.
  out.test.insert(out.test.begin(), out.train.begin(), out.train.end());
  return out;
}

}  // namespace blink

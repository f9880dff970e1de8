#pragma once

#include "blink/graph.hpp"
#include "blink/graph_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace blink {

/// Two disjoint undirected A-X-B and A-Y-B paths, every edge weight w.
WeightedGraph two_path_graph(double w);
/// two_path_graph plus an undirected X-Y edge of weight w.
WeightedGraph crossed_two_path_graph(double w);

/// n nodes "v<i>", each with `out_degree` edges to distinct uniformly chosen
/// other nodes; all edges weigh `edge_weight`, all nodes `node_weight`.
WeightedGraph random_out_degree_graph(std::size_t n, std::size_t out_degree, double edge_weight, double node_weight,
                                      std::uint64_t seed);

/// Temporal benchmark with planted answers. Each source owns a small gadget
/// whose best-scoring non-neighbor, under uniform edge weight w and node
/// weight 1, is one target when w is at most about 0.54 and another above
/// (first kind), or one target below about 0.46 and another above (second
/// kind). The planted new edge of each source goes to its best target at
/// w = 0.5, so only w = 0.5 on the 0.1-spaced grid predicts every task.
/// Remaining nodes form an unrelated random graph.
struct PlantedBenchmark {
  std::vector<EdgeLine> train;
  std::vector<EdgeLine> test;
  std::vector<std::string> first_kind_sources;
  std::vector<std::string> second_kind_sources;
};

PlantedBenchmark planted_benchmark(std::size_t total_nodes, std::size_t gadgets_per_kind, std::uint64_t seed);

}  // namespace blink

#pragma once

#include "blink/graph.hpp"

#include <istream>
#include <string>
#include <vector>

namespace blink {

/// One line of an edge-list file: src, dst and an optional f value.
struct EdgeLine {
  std::string src;
  std::string dst;
  double value = 1.0;
};

/// One line of a node file.
struct NodeLine {
  std::string name;
  double value = 1.0;
};

// Tab-separated readers. Blank lines and lines starting with '#' are skipped.
// Malformed lines throw kParse naming the source and the 1-based line number.

std::vector<EdgeLine> read_edge_lines(std::istream& in, const std::string& source = "<stream>");
std::vector<NodeLine> read_node_lines(std::istream& in, const std::string& source = "<stream>");
/// `weight<TAB>member1<TAB>member2...`
std::vector<HyperedgeRecord> read_hyperedge_lines(std::istream& in, const std::string& source = "<stream>");

std::vector<EdgeLine> read_edge_file(const std::string& path);
std::vector<NodeLine> read_node_file(const std::string& path);
std::vector<HyperedgeRecord> read_hyperedge_file(const std::string& path);

/// Graph whose edge and node weights are the file values themselves.
/// Parallel lines are merged; with `undirected` each line adds both directions.
WeightedGraph graph_from_lines(const std::vector<EdgeLine>& edges, const std::vector<NodeLine>& nodes = {},
                               bool undirected = false);

}  // namespace blink

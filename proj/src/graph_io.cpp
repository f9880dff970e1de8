#include "blink/graph_io.hpp"

#include "blink/error.hpp"

#include <charconv>
#include <limits>
#include <fstream>
#include <string_view>

namespace blink {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

[[noreturn]] void parse_error(const std::string& source, std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::kParse, source + ":" + std::to_string(line_no) + ": " + msg);
}

double parse_value(std::string_view text, const std::string& source, std::size_t line_no) {
  double v = 0.0;
  if (text == "inf" || text == "Inf" || text == "INF") return std::numeric_limits<double>::infinity();
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    parse_error(source, line_no, "bad number '" + std::string(text) + "'");
  if (!(v > 0.0)) parse_error(source, line_no, "value must be positive, got '" + std::string(text) + "'");
  return v;
}

// Calls fn(fields, line_no) for every content line.
template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    fn(split_tabs(line), line_no);
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  return in;
}

}  // namespace

std::vector<EdgeLine> read_edge_lines(std::istream& in, const std::string& source) {
  std::vector<EdgeLine> out;
  for_each_line(in, [&](const std::vector<std::string_view>& f, std::size_t line_no) {
    if (f.size() < 2 || f.size() > 3) parse_error(source, line_no, "expected src<TAB>dst[<TAB>value]");
    if (f[0].empty() || f[1].empty()) parse_error(source, line_no, "empty node name");
    EdgeLine e{std::string(f[0]), std::string(f[1]), 1.0};
    if (f.size() == 3) e.value = parse_value(f[2], source, line_no);
    out.push_back(std::move(e));
  });
  return out;
}

std::vector<NodeLine> read_node_lines(std::istream& in, const std::string& source) {
  std::vector<NodeLine> out;
  for_each_line(in, [&](const std::vector<std::string_view>& f, std::size_t line_no) {
    if (f.size() != 2 || f[0].empty()) parse_error(source, line_no, "expected node<TAB>value");
    out.push_back(NodeLine{std::string(f[0]), parse_value(f[1], source, line_no)});
  });
  return out;
}

std::vector<HyperedgeRecord> read_hyperedge_lines(std::istream& in, const std::string& source) {
  std::vector<HyperedgeRecord> out;
  for_each_line(in, [&](const std::vector<std::string_view>& f, std::size_t line_no) {
    if (f.size() < 3) parse_error(source, line_no, "expected weight<TAB>member1<TAB>member2...");
    HyperedgeRecord rec;
    rec.weight = parse_value(f[0], source, line_no);
    for (std::size_t i = 1; i < f.size(); ++i) {
      if (f[i].empty()) parse_error(source, line_no, "empty member name");
      rec.members.emplace_back(f[i]);
    }
    out.push_back(std::move(rec));
  });
  return out;
}

std::vector<EdgeLine> read_edge_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_edge_lines(in, path);
}

std::vector<NodeLine> read_node_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_node_lines(in, path);
}

std::vector<HyperedgeRecord> read_hyperedge_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_hyperedge_lines(in, path);
}

WeightedGraph graph_from_lines(const std::vector<EdgeLine>& edges, const std::vector<NodeLine>& nodes,
                               bool undirected) {
  GraphBuilder b;
  for (const auto& e : edges) {
    const NodeId s = b.intern(e.src);
    const NodeId d = b.intern(e.dst);
    if (undirected)
      b.add_undirected_edge(s, d, e.value);
    else
      b.add_edge(s, d, e.value);
  }
  for (const auto& n : nodes) b.add_node(n.name, n.value);
  return std::move(b).build();
}

}  // namespace blink

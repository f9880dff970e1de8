#include "blink/approx.hpp"
#include "blink/baselines.hpp"
#include "blink/error.hpp"
#include "blink/exact.hpp"
#include "blink/graph_io.hpp"
#include "blink/harness.hpp"
#include "blink/monte_carlo.hpp"
#include "blink/synthetic.hpp"
#include "blink/weighting.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace blink;

struct GraphOptions {
  std::string path;
  std::string nodes;
  bool hyperedges = false;
  bool undirected = false;
  std::string weights = "direct";
  double b1 = 0.5;
  double b2 = 0.5;
};

void add_graph_options(CLI::App* cmd, GraphOptions& o) {
  cmd->add_option("graph", o.path, "edge file (src<TAB>dst<TAB>value) or hyperedge file")->required();
  cmd->add_option("--nodes", o.nodes, "node file (name<TAB>value)");
  cmd->add_flag("--hyperedges", o.hyperedges, "graph file lists hyperedges");
  cmd->add_flag("--undirected", o.undirected, "add both directions of every edge");
  cmd->add_option("--weights", o.weights, "how file values become weights")
      ->check(CLI::IsMember({"direct", "exp", "linear"}));
  cmd->add_option("--b1", o.b1, "edge parameter of exp/linear weighting");
  cmd->add_option("--b2", o.b2, "node parameter of exp/linear weighting");
}

WeightedGraph load_graph(const GraphOptions& o) {
  RawGraph raw;
  if (o.hyperedges) {
    raw = raw_from_hyperedges(read_hyperedge_file(o.path));
  } else {
    std::vector<NodeLine> nodes;
    if (!o.nodes.empty()) nodes = read_node_file(o.nodes);
    raw = raw_from_lines(read_edge_file(o.path), nodes, o.undirected);
  }
  WeightScheme scheme;
  scheme.kind = o.weights == "exp"      ? SchemeKind::kExponential
                : o.weights == "linear" ? SchemeKind::kLinear
                                        : SchemeKind::kDirect;
  scheme.b1 = o.b1;
  scheme.b2 = o.b2;
  return apply_weights(raw, scheme);
}

NodeId lookup(const WeightedGraph& g, const std::string& name) {
  auto v = g.find(name);
  if (!v) throw Error(ErrorCode::kInvalidArgument, "unknown node '" + name + "'");
  return *v;
}

Variation parse_variation(const std::string& s) {
  if (s == "high") return Variation::kHigh;
  if (s == "low") return Variation::kLow;
  return Variation::kMedium;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path.string() + "'");
  f << text;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::kParse:
      return 2;
    case ErrorCode::kCapExceeded:
    case ErrorCode::kBudgetExceeded:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blink model proximity scores and link-prediction benchmarks"};
  app.require_subcommand(1);

  GraphOptions go;
  std::string src, dst, out, measure = "blink", variation = "medium";
  std::uint64_t samples = 100000, seed = 1;
  std::size_t threads = 1, top = 0;
  double alpha = 0.5, beta = 0.1;
  std::vector<std::string> measures;

  auto* score = app.add_subcommand("score", "score one pair under several measures");
  add_graph_options(score, go);
  score->add_option("src", src)->required();
  score->add_option("dst", dst)->required();
  score->add_option("--measure", measures,
                    "exact, high, medium, low, mc, ppr, katz, adamic_adar, conductance, shortest_path");
  score->add_option("--samples", samples);
  score->add_option("--seed", seed);
  score->add_option("--alpha", alpha);
  score->add_option("--beta", beta);
  score->add_option("--out", out);

  auto* rank = app.add_subcommand("rank", "rank all nodes from one source");
  add_graph_options(rank, go);
  rank->add_option("src", src)->required();
  rank->add_option("--measure", measure)->check(CLI::IsMember({"blink", "ppr", "katz", "adamic_adar"}));
  rank->add_option("--variation", variation)->check(CLI::IsMember({"high", "medium", "low"}));
  rank->add_option("--samples", samples, "subgraph samples of the high variation");
  rank->add_option("--seed", seed);
  rank->add_option("--alpha", alpha);
  rank->add_option("--beta", beta);
  rank->add_option("--threads", threads);
  rank->add_option("--top", top, "print only the first N rows");
  rank->add_option("--out", out);

  std::string config_path;
  auto* predict_cmd = app.add_subcommand("predict", "run a link-prediction benchmark");
  predict_cmd->add_option("config", config_path)->required();
  predict_cmd->add_option("--out", out, "directory for the summary, task and curve files");
  predict_cmd->add_option("--threads", threads);

  auto* scan_cmd = app.add_subcommand("scan", "grid-search parameters over all tasks");
  scan_cmd->add_option("config", config_path)->required();
  scan_cmd->add_option("--out", out);
  scan_cmd->add_option("--threads", threads);

  auto* oracle = app.add_subcommand("oracle", "exact reachability probability and score");
  add_graph_options(oracle, go);
  oracle->add_option("src", src)->required();
  oracle->add_option("dst", dst)->required();
  oracle->add_option("--out", out);

  auto* mc = app.add_subcommand("mc", "Monte Carlo reachability estimate");
  add_graph_options(mc, go);
  mc->add_option("src", src)->required();
  mc->add_option("dst", dst)->required();
  mc->add_option("--samples", samples);
  mc->add_option("--seed", seed);
  mc->add_option("--threads", threads);
  mc->add_option("--out", out);

  std::string kind = "planted";
  std::size_t synth_nodes = 200, gadgets = 7, degree = 5;
  double edge_weight = 0.5, node_weight = 1.0;
  auto* synth = app.add_subcommand("synth", "write a synthetic dataset");
  synth->add_option("kind", kind)->check(CLI::IsMember({"planted", "random"}));
  synth->add_option("--out", out, "output directory")->required();
  synth->add_option("--nodes", synth_nodes);
  synth->add_option("--gadgets", gadgets, "planted gadgets of each kind");
  synth->add_option("--degree", degree, "out-degree of the random graph");
  synth->add_option("--edge-weight", edge_weight);
  synth->add_option("--node-weight", node_weight);
  synth->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*score) {
      const WeightedGraph g = load_graph(go);
      const NodeId a = lookup(g, src), b = lookup(g, dst);
      const bool all = measures.empty();
      if (all) measures = {"exact", "medium", "mc", "ppr", "katz", "adamic_adar", "conductance", "shortest_path"};
      Output o(out);
      o.stream() << "measure,value\n";
      for (const std::string& m : measures) {
        double v = 0.0;
        try {
          if (m == "exact") {
            v = exact_blink_score(g, a, b);
          } else if (m == "high" || m == "medium" || m == "low") {
            ApproxParams p;
            p.mc_samples = samples;
            p.seed = seed;
            v = approx_blink_pair(g, a, b, parse_variation(m), p);
          } else if (m == "mc") {
            v = score_from_probability(mc_blink_estimate(g, a, b, samples, seed).mean);
          } else if (m == "ppr") {
            v = ppr_scores(g, a, alpha).score_of(b).value_or(0.0);
          } else if (m == "katz") {
            v = katz_scores(g, a, beta).score_of(b).value_or(0.0);
          } else if (m == "adamic_adar") {
            v = adamic_adar(g, a).score_of(b).value_or(0.0);
          } else if (m == "conductance") {
            v = effective_conductance(g, a, b);
          } else if (m == "shortest_path") {
            v = weighted_shortest_path(g, a, b);
          } else {
            throw Error(ErrorCode::kInvalidArgument, "unknown measure '" + m + "'");
          }
        } catch (const Error& e) {
          // With the default list, measures that do not apply are reported as NA.
          if (!all) throw;
          o.stream() << m << ",NA\n";
          continue;
        }
        o.stream() << m << ',' << format_value(v) << '\n';
      }
    } else if (*rank) {
      const WeightedGraph g = load_graph(go);
      const NodeId a = lookup(g, src);
      ScoreTable t;
      if (measure == "blink") {
        ApproxParams p;
        p.mc_samples = samples;
        p.seed = seed;
        p.threads = threads;
        t = approx_blink(g, a, std::nullopt, parse_variation(variation), p);
      } else if (measure == "ppr") {
        t = ppr_scores(g, a, alpha);
      } else if (measure == "katz") {
        t = katz_scores(g, a, beta);
      } else {
        t = adamic_adar(g, a);
      }
      Output o(out);
      o.stream() << "node,score\n";
      const std::size_t n = top == 0 ? t.entries.size() : std::min(top, t.entries.size());
      for (std::size_t i = 0; i < n; ++i)
        o.stream() << g.name(t.entries[i].node) << ',' << format_value(t.entries[i].score) << '\n';
    } else if (*predict_cmd || *scan_cmd) {
      HarnessConfig cfg = load_config(config_path);
      if (threads > 1) cfg.threads = threads;
      if (!out.empty()) cfg.out = out;
      const Dataset ds = load_temporal_dataset(cfg);
      if (!ds.unmapped.empty())
        std::cerr << "warning: " << ds.unmapped.size() << " test-period nodes have no training counterpart\n";
      if (*predict_cmd) {
        const PredictOutcome p = predict(ds, cfg);
        std::ostringstream summary;
        write_summary_csv(summary, cfg, p);
        std::cout << summary.str();
        if (!cfg.out.empty()) {
          const std::filesystem::path dir(cfg.out);
          std::filesystem::create_directories(dir);
          write_file(dir / (cfg.name + ".summary.csv"), summary.str());
          std::ostringstream tasks, roc;
          write_tasks_csv(tasks, ds, p.report);
          write_roc_csv(roc, p.report.roc);
          write_file(dir / (cfg.name + ".tasks.csv"), tasks.str());
          write_file(dir / (cfg.name + ".roc.csv"), roc.str());
        }
      } else {
        std::vector<std::size_t> ids(ds.tasks.size());
        for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
        const GridResult r = scan(ds, cfg, ids);
        Output o(out);
        write_scan_csv(o.stream(), r);
      }
    } else if (*oracle) {
      const WeightedGraph g = load_graph(go);
      const NodeId a = lookup(g, src), b = lookup(g, dst);
      const double p = exact_reachability(g, a, b);
      Output o(out);
      o.stream() << "probability,score\n" << format_value(p) << ',' << format_value(score_from_probability(p)) << '\n';
    } else if (*mc) {
      const WeightedGraph g = load_graph(go);
      const NodeId a = lookup(g, src), b = lookup(g, dst);
      const McEstimate e = mc_blink_estimate(g, a, b, samples, seed, threads);
      Output o(out);
      o.stream() << "probability,std_error,samples,hits,score\n"
                 << format_value(e.mean) << ',' << format_value(e.std_error) << ',' << e.samples << ',' << e.hits
                 << ',' << format_value(score_from_probability(e.mean)) << '\n';
    } else if (*synth) {
      const std::filesystem::path dir(out);
      std::filesystem::create_directories(dir);
      std::ostringstream text;
      if (kind == "planted") {
        const PlantedBenchmark pb = planted_benchmark(synth_nodes, gadgets, seed);
        for (const EdgeLine& e : pb.train) text << e.src << '\t' << e.dst << '\n';
        write_file(dir / "train.tsv", text.str());
        text.str("");
        for (const EdgeLine& e : pb.test) text << e.src << '\t' << e.dst << '\n';
        write_file(dir / "test.tsv", text.str());
      } else {
        const WeightedGraph g = random_out_degree_graph(synth_nodes, degree, edge_weight, node_weight, seed);
        for (NodeId v = 0; v < g.node_count(); ++v)
          for (EdgeId e = g.out_begin(v); e < g.out_end(v); ++e)
            text << g.name(v) << '\t' << g.name(g.edge(e).dst) << '\t' << format_value(g.edge(e).weight) << '\n';
        write_file(dir / "edges.tsv", text.str());
        text.str("");
        for (NodeId v = 0; v < g.node_count(); ++v) text << g.name(v) << '\t' << format_value(g.node_weight(v)) << '\n';
        write_file(dir / "nodes.tsv", text.str());
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace blink {

/// Settings of one benchmark run, read from a `key = value` file.
/// Blank lines and lines starting with '#' are ignored. Relative file paths
/// are resolved against the directory of the config file.
struct HarnessConfig {
  std::string name = "run";
  /// blink | ppr | katz | adamic_adar | erd | mc
  std::string measure = "blink";
  /// high | medium | low | exact (blink only)
  std::string variation = "medium";
  /// exponential | linear | direct; empty picks linear for ppr, exponential otherwise.
  std::string scheme;
  double b1 = 0.5;
  double b2 = 0.5;
  double gamma = 5.0;
  double alpha = 0.5;
  double beta = 0.1;
  double t1 = 1e-4;
  double t2 = 2e-6;
  std::uint64_t seed = 1;
  std::uint64_t samples = 10000;
  std::size_t hybrid_k = 0;
  std::size_t max_paths = 500000;

  std::string train;
  std::string test;
  std::string nodes;
  std::string mapping;
  /// edges | hyperedges
  std::string format = "edges";
  /// none | arxiv | wiki
  std::string knowledge = "none";
  bool undirected = false;

  std::size_t min_new = 1;
  /// Upper bound on new targets as a fraction of the source's training
  /// out-degree; 0 disables it.
  double max_new_fraction = 0.0;
  bool exclude_in_neighbors = false;
  /// Minimum activity (out-degree, or hyperedge count) in each period for a
  /// node to be a core node; 0 disables the core rule.
  std::size_t core_min_train = 0;
  std::size_t core_min_test = 0;

  /// precision | global_precision | map
  std::string metric = "precision";
  /// Candidates farther than this many hops score 0; 0 scores every node.
  std::size_t max_hops = 4;
  /// none | max | min | sum | product
  std::string symmetric = "none";
  /// Fraction of tasks used to pick parameters; 0 evaluates all tasks.
  double train_fraction = 0.0;
  std::size_t threads = 1;
  std::string out;

  std::map<std::string, std::vector<double>> grid;

  /// Applies one key; throws kParse for unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
};

HarnessConfig parse_config(std::istream& in, const std::string& source = "<stream>",
                           const std::string& base_dir = "");
HarnessConfig load_config(const std::string& path);

}  // namespace blink

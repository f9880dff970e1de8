#include "blink/config.hpp"

#include "blink/error.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace blink {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw Error(ErrorCode::kParse, "key '" + key + "' expects a number, got '" + v + "'");
  return out;
}

std::uint64_t to_count(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw Error(ErrorCode::kParse, "key '" + key + "' expects a non-negative integer, got '" + v + "'");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error(ErrorCode::kParse, "key '" + key + "' expects true or false, got '" + v + "'");
}

void one_of(const std::string& key, const std::string& v, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (v == a) return;
  throw Error(ErrorCode::kParse, "unsupported value '" + v + "' for key '" + key + "'");
}

}  // namespace

void HarnessConfig::set(const std::string& key, const std::string& value) {
  if (key == "name") {
    name = value;
  } else if (key == "measure") {
    one_of(key, value, {"blink", "ppr", "katz", "adamic_adar", "erd", "mc"});
    measure = value;
  } else if (key == "variation") {
    one_of(key, value, {"high", "medium", "low", "exact"});
    variation = value;
  } else if (key == "scheme") {
    one_of(key, value, {"exponential", "linear", "direct"});
    scheme = value;
  } else if (key == "b1") {
    b1 = to_double(key, value);
  } else if (key == "b2") {
    b2 = to_double(key, value);
  } else if (key == "gamma") {
    gamma = to_double(key, value);
  } else if (key == "alpha") {
    alpha = to_double(key, value);
  } else if (key == "beta") {
    beta = to_double(key, value);
  } else if (key == "t1") {
    t1 = to_double(key, value);
  } else if (key == "t2") {
    t2 = to_double(key, value);
  } else if (key == "seed") {
    seed = to_count(key, value);
  } else if (key == "samples") {
    samples = to_count(key, value);
  } else if (key == "hybrid_k") {
    hybrid_k = to_count(key, value);
  } else if (key == "max_paths") {
    max_paths = to_count(key, value);
  } else if (key == "train") {
    train = value;
  } else if (key == "test") {
    test = value;
  } else if (key == "nodes") {
    nodes = value;
  } else if (key == "mapping") {
    mapping = value;
  } else if (key == "format") {
    one_of(key, value, {"edges", "hyperedges"});
    format = value;
  } else if (key == "knowledge") {
    one_of(key, value, {"none", "arxiv", "wiki"});
    knowledge = value;
  } else if (key == "undirected") {
    undirected = to_bool(key, value);
  } else if (key == "min_new") {
    min_new = to_count(key, value);
  } else if (key == "max_new_fraction") {
    max_new_fraction = to_double(key, value);
  } else if (key == "exclude_in_neighbors") {
    exclude_in_neighbors = to_bool(key, value);
  } else if (key == "core_min_train") {
    core_min_train = to_count(key, value);
  } else if (key == "core_min_test") {
    core_min_test = to_count(key, value);
  } else if (key == "metric") {
    one_of(key, value, {"precision", "global_precision", "map"});
    metric = value;
  } else if (key == "max_hops") {
    max_hops = to_count(key, value);
  } else if (key == "symmetric") {
    one_of(key, value, {"none", "max", "min", "sum", "product"});
    symmetric = value;
  } else if (key == "train_fraction") {
    train_fraction = to_double(key, value);
    if (!(train_fraction >= 0.0 && train_fraction < 1.0))
      throw Error(ErrorCode::kParse, "train_fraction must lie in [0, 1)");
  } else if (key == "threads") {
    threads = to_count(key, value);
  } else if (key == "out") {
    out = value;
  } else if (key.rfind("grid_", 0) == 0) {
    const std::string param = key.substr(5);
    one_of(key, param, {"b1", "b2", "gamma", "alpha", "beta"});
    std::vector<double> values;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(to_double(key, trim(item)));
    if (values.empty()) throw Error(ErrorCode::kParse, "empty grid for '" + param + "'");
    grid[param] = std::move(values);
  } else {
    throw Error(ErrorCode::kParse, "unknown key '" + key + "'");
  }
}

HarnessConfig parse_config(std::istream& in, const std::string& source, const std::string& base_dir) {
  HarnessConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::kParse, source + ":" + std::to_string(line_no) + ": expected key = value");
    try {
      cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    } catch (const Error& e) {
      std::string msg = e.what();
      const std::string prefix = std::string(to_string(e.code())) + ": ";
      if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
      throw Error(ErrorCode::kParse, source + ":" + std::to_string(line_no) + ": " + msg);
    }
  }
  if (!base_dir.empty()) {
    for (std::string* p : {&cfg.train, &cfg.test, &cfg.nodes, &cfg.mapping, &cfg.out})
      if (!p->empty() && std::filesystem::path(*p).is_relative()) *p = (std::filesystem::path(base_dir) / *p).string();
  }
  return cfg;
}

HarnessConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  return parse_config(in, path, std::filesystem::path(path).parent_path().string());
}

}  // namespace blink

// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "submod/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "submod/dispatch.hpp"
#include "submod/graph.hpp"
#include "submod/objectives.hpp"
#include "submod/oracle.hpp"
#include "submod/rng.hpp"

namespace submod {

namespace {

std::string trim(const std::string& text) {
  const std::size_t a = text.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const std::size_t b = text.find_last_not_of(" \t\r");
  return text.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> parts;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::uint64_t parse_u64(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer for " + key + ": '" + value + "'");
  }
}

double parse_f64(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad number for " + key + ": '" + value + "'");
  }
}

bool parse_bool(const std::string& value, const std::string& key) {
  if (value == "true" || value == "on" || value == "1") return true;
  if (value == "false" || value == "off" || value == "0") return false;
  throw ConfigError("config: bad boolean for " + key + ": '" + value + "'");
}

}  // namespace

void ExperimentConfig::validate() const {
  if (repetitions < 1) throw ConfigError("config: repetitions must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ConfigError("config: epsilon must lie in (0, 1)");
  }
  if (algorithms.empty()) throw ConfigError("config: no algorithms listed");
  for (const std::string& name : algorithms) {
    const auto& known = known_algorithms();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw ConfigError("config: unknown algorithm '" + name + "'");
    }
  }
  for (std::size_t i = 1; i < k_values.size(); ++i) {
    if (k_values[i] <= k_values[i - 1]) {
      throw ConfigError("config: k_values must be strictly ascending");
    }
  }
  if (dataset == Dataset::kEr) {
    if (er_n < 1) throw ConfigError("config: er.n must be >= 1");
    if (!(er_p >= 0.0 && er_p <= 1.0)) {
      throw ConfigError("config: er.p must lie in [0, 1]");
    }
  } else if (edge_list_path.empty()) {
    throw ConfigError("config: edge_list.path missing");
  }
  if (output.empty()) throw ConfigError("config: output missing");
}

ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& origin) {
  ExperimentConfig config;
  config.algorithms.clear();
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: " + origin + ":" + std::to_string(line_no) +
                        ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "dataset") {
      if (value == "er") {
        config.dataset = ExperimentConfig::Dataset::kEr;
      } else if (value == "edge_list") {
        config.dataset = ExperimentConfig::Dataset::kEdgeList;
      } else {
        throw ConfigError("config: unknown dataset '" + value + "'");
      }
    } else if (key == "er.n") {
      config.er_n = parse_u64(value, key);
    } else if (key == "er.p") {
      config.er_p = parse_f64(value, key);
    } else if (key == "er.seed") {
      config.er_seed = parse_u64(value, key);
    } else if (key == "edge_list.path") {
      config.edge_list_path = value;
    } else if (key == "objective") {
      if (value == "maxcut") {
        config.objective = ExperimentConfig::Objective::kMaxcut;
      } else if (value == "revmax") {
        config.objective = ExperimentConfig::Objective::kRevmax;
      } else {
        throw ConfigError("config: unknown objective '" + value + "'");
      }
    } else if (key == "revmax.seed") {
      config.revmax_seed = parse_u64(value, key);
    } else if (key == "algorithms") {
      config.algorithms = split_list(value);
    } else if (key == "k_values") {
      config.k_values.clear();
      for (const std::string& item : split_list(value)) {
        config.k_values.push_back(parse_u64(item, key));
      }
    } else if (key == "repetitions") {
      config.repetitions = parse_u64(value, key);
    } else if (key == "epsilon") {
      config.epsilon = parse_f64(value, key);
    } else if (key == "ell") {
      config.ell = parse_u64(value, key);
    } else if (key == "base_seed") {
      config.base_seed = parse_u64(value, key);
    } else if (key == "reference") {
      config.reference = value;
    } else if (key == "timing") {
      config.timing = parse_bool(value, key);
    } else if (key == "output") {
      config.output = value;
    } else {
      throw ConfigError("config: " + origin + ":" + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path);
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view algorithm,
                          std::size_t k, std::size_t rep) {
  return base_seed ^ fnv1a(std::string(algorithm) + ":" + std::to_string(k) +
                           ":" + std::to_string(rep));
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr - buf);
}

void write_csv_row(std::ostream& out, const std::string& dataset,
                   const std::string& objective, const std::string& algorithm,
                   std::size_t k, const std::string& rep, std::uint64_t seed,
                   double value, double queries, double rounds,
                   double wall_ms) {
  out << dataset << ',' << objective << ',' << algorithm << ',' << k << ','
      << rep << ',' << seed << ',' << format_double(value) << ','
      << format_double(queries) << ',' << format_double(rounds) << ','
      << format_double(wall_ms) << '\n';
}

ExperimentResult run_experiment_rows(const ExperimentConfig& config) {
  config.validate();

  Graph graph;
  std::string dataset_name;
  if (config.dataset == ExperimentConfig::Dataset::kEr) {
    graph = gen_er(config.er_n, config.er_p, config.er_seed);
    dataset_name = "er-n" + std::to_string(config.er_n);
  } else {
    graph = load_edge_list(config.edge_list_path);
    dataset_name = config.edge_list_path;
    const std::size_t slash = dataset_name.find_last_of('/');
    if (slash != std::string::npos) dataset_name.erase(0, slash + 1);
  }

  std::shared_ptr<const SetFunction> fn;
  std::string objective_name;
  if (config.objective == ExperimentConfig::Objective::kMaxcut) {
    fn = std::make_shared<MaxcutFunction>(graph);
    objective_name = "maxcut";
  } else {
    fn = std::make_shared<RevenueFunction>(
        graph, gen_revmax_params(graph, config.revmax_seed));
    objective_name = "revmax";
  }

  std::vector<std::size_t> ks = config.k_values;
  if (ks.empty()) {
    // Default sweep, clipped to the instance size.
    for (std::size_t k : {25u, 50u, 100u, 200u, 400u}) {
      if (k <= graph.vertex_count()) ks.push_back(k);
    }
    if (ks.empty()) ks.push_back(graph.vertex_count());
  }
  for (std::size_t k : ks) {
    if (k > graph.vertex_count()) {
      throw ConfigError("config: k=" + std::to_string(k) +
                        " exceeds n=" + std::to_string(graph.vertex_count()));
    }
  }

  ExperimentResult result;
  result.dataset = dataset_name;
  result.objective = objective_name;
  result.k_values = ks;
  for (const std::string& algorithm : config.algorithms) {
    for (std::size_t k : ks) {
      for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
        AlgoParams params;
        params.epsilon = config.epsilon;
        params.ell = config.ell;
        params.seed = derive_seed(config.base_seed, algorithm, k, rep);
        ValueOracle oracle{fn};  // fresh ledger per cell
        RunRecord record = run_algorithm(algorithm, oracle, k, params);
        if (!config.timing) record.wall_ms = 0.0;
        result.rows.push_back({algorithm, k, rep, std::move(record)});
      }
    }
  }
  return result;
}

void write_experiment_csv(const ExperimentConfig& config,
                          const ExperimentResult& result, std::ostream& out) {
  out << csv_header() << '\n';
  for (const ExperimentRow& row : result.rows) {
    write_csv_row(out, result.dataset, result.objective, row.algorithm, row.k,
                  std::to_string(row.rep), row.record.seed, row.record.value,
                  static_cast<double>(row.record.queries),
                  static_cast<double>(row.record.rounds), row.record.wall_ms);
  }

  struct Stats {
    double mean_value = 0, std_value = 0;
    double mean_queries = 0, std_queries = 0;
    double mean_rounds = 0, std_rounds = 0;
    double mean_wall = 0, std_wall = 0;
    std::size_t count = 0;
  };
  auto stats_for = [&](const std::string& algorithm, std::size_t k) {
    std::vector<const RunRecord*> cell;
    for (const ExperimentRow& row : result.rows) {
      if (row.algorithm == algorithm && row.k == k) cell.push_back(&row.record);
    }
    Stats s;
    s.count = cell.size();
    if (cell.empty()) return s;
    for (const RunRecord* r : cell) {
      s.mean_value += r->value;
      s.mean_queries += static_cast<double>(r->queries);
      s.mean_rounds += static_cast<double>(r->rounds);
      s.mean_wall += r->wall_ms;
    }
    const double n = static_cast<double>(cell.size());
    s.mean_value /= n;
    s.mean_queries /= n;
    s.mean_rounds /= n;
    s.mean_wall /= n;
    if (cell.size() > 1) {
      for (const RunRecord* r : cell) {
        s.std_value += (r->value - s.mean_value) * (r->value - s.mean_value);
        s.std_queries += (r->queries - s.mean_queries) *
                         (r->queries - s.mean_queries);
        s.std_rounds +=
            (r->rounds - s.mean_rounds) * (r->rounds - s.mean_rounds);
        s.std_wall += (r->wall_ms - s.mean_wall) * (r->wall_ms - s.mean_wall);
      }
      s.std_value = std::sqrt(s.std_value / (n - 1));
      s.std_queries = std::sqrt(s.std_queries / (n - 1));
      s.std_rounds = std::sqrt(s.std_rounds / (n - 1));
      s.std_wall = std::sqrt(s.std_wall / (n - 1));
    }
    return s;
  };

  const bool have_reference =
      std::find(config.algorithms.begin(), config.algorithms.end(),
                config.reference) != config.algorithms.end();
  auto safe_div = [](double a, double b) { return b != 0.0 ? a / b : 0.0; };

  for (const std::string& algorithm : config.algorithms) {
    for (std::size_t k : result.k_values) {
      const Stats s = stats_for(algorithm, k);
      if (s.count == 0) continue;
      write_csv_row(out, result.dataset, result.objective, algorithm, k,
                    "mean", 0, s.mean_value, s.mean_queries, s.mean_rounds,
                    s.mean_wall);
      if (s.count > 1) {
        write_csv_row(out, result.dataset, result.objective, algorithm, k,
                      "std", 0, s.std_value, s.std_queries, s.std_rounds,
                      s.std_wall);
      }
      if (have_reference) {
        const Stats ref = stats_for(config.reference, k);
        write_csv_row(out, result.dataset, result.objective, algorithm, k,
                      "norm", 0, safe_div(s.mean_value, ref.mean_value),
                      safe_div(s.mean_queries, ref.mean_queries),
                      safe_div(s.mean_rounds, ref.mean_rounds),
                      safe_div(s.mean_wall, ref.mean_wall));
      }
    }
  }
}

void run_experiment(const ExperimentConfig& config) {
  const ExperimentResult result = run_experiment_rows(config);
  std::ofstream out(config.output);
  if (!out) {
    throw std::runtime_error("run_experiment: cannot write " + config.output);
  }
  write_experiment_csv(config, result, out);
  if (!out) {
    throw std::runtime_error("run_experiment: write failed for " +
                             config.output);
  }
}

}  // namespace submod

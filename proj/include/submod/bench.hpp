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

#ifndef SUBMOD_BENCH_HPP
#define SUBMOD_BENCH_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "submod/core.hpp"

namespace submod {

// Configuration errors (bad file, bad key, invariant violations) are kept
// apart from runtime failures so the CLI can exit 1 vs 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  enum class Dataset { kEr, kEdgeList };
  enum class Objective { kMaxcut, kRevmax };

  Dataset dataset = Dataset::kEr;
  std::size_t er_n = 1000;
  double er_p = 0.005;
  std::uint64_t er_seed = 1;
  std::string edge_list_path;

  Objective objective = Objective::kMaxcut;
  std::uint64_t revmax_seed = 1;

  std::vector<std::string> algorithms;
  std::vector<std::size_t> k_values;  // ascending; defaulted from n if empty
  std::size_t repetitions = 5;
  double epsilon = 0.1;
  std::size_t ell = 5;
  std::uint64_t base_seed = 1;
  std::string reference = "fast_random_greedy";
  bool timing = false;  // off by default so reruns are byte-identical
  std::string output = "results.csv";

  void validate() const;  // throws ConfigError
};

// Flat "key = value" config with '#' comments; lists are comma separated.
// Unknown keys are configuration errors.
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& origin = "<config>");

// Derived per-cell seed: base_seed xor hash(algorithm, k, rep).
std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view algorithm,
                          std::size_t k, std::size_t rep);

inline const char* csv_header() {
  return "dataset,objective,algorithm,k,rep,seed,value,queries,rounds,wall_ms";
}

// Shortest-round-trip float formatting keeps reruns byte-identical.
std::string format_double(double v);
void write_csv_row(std::ostream& out, const std::string& dataset,
                   const std::string& objective, const std::string& algorithm,
                   std::size_t k, const std::string& rep, std::uint64_t seed,
                   double value, double queries, double rounds,
                   double wall_ms);

struct ExperimentRow {
  std::string algorithm;
  std::size_t k = 0;
  std::size_t rep = 0;
  RunRecord record;
};

struct ExperimentResult {
  std::string dataset;
  std::string objective;
  std::vector<ExperimentRow> rows;
  std::vector<std::size_t> k_values;
};

// Runs every (algorithm, k, rep) cell with a fresh ledger and derived seed.
// Throws ConfigError for invalid configs and std::runtime_error for runtime
// failures (unloadable dataset, unwritable output).
ExperimentResult run_experiment_rows(const ExperimentConfig& config);

// Full run: rows plus aggregate lines (per algorithm/k: a mean row, a std
// row when repetitions > 1, and a norm row against the reference algorithm's
// mean when the reference was part of the run), written to config.output.
void run_experiment(const ExperimentConfig& config);
void write_experiment_csv(const ExperimentConfig& config,
                          const ExperimentResult& result, std::ostream& out);

}  // namespace submod

#endif  // SUBMOD_BENCH_HPP

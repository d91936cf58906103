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

// Benchmark CLI: config-driven sweeps over datasets, objectives, algorithms
// and k, with CSV output. Exit codes: 0 success, 1 configuration error,
// 2 runtime error.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

#include "submod/bench.hpp"
#include "submod/exact.hpp"
#include "submod/graph.hpp"
#include "submod/objectives.hpp"
#include "submod/oracle.hpp"

namespace {

int cmd_run(const std::string& config_path) {
  const submod::ExperimentConfig config =
      submod::parse_config_file(config_path);
  submod::run_experiment(config);
  std::cout << "wrote " << config.output << "\n";
  return 0;
}

int cmd_gen_er(std::size_t n, double p, std::uint64_t seed,
               const std::string& out) {
  const submod::Graph g = submod::gen_er(n, p, seed);
  submod::write_edge_list(g, out);
  std::cout << "wrote " << out << " (" << g.vertex_count() << " vertices, "
            << g.edge_count() << " edges)\n";
  return 0;
}

int cmd_opt(const std::string& config_path) {
  const submod::ExperimentConfig config =
      submod::parse_config_file(config_path);

  submod::Graph graph;
  if (config.dataset == submod::ExperimentConfig::Dataset::kEr) {
    graph = submod::gen_er(config.er_n, config.er_p, config.er_seed);
  } else {
    graph = submod::load_edge_list(config.edge_list_path);
  }
  std::shared_ptr<const submod::SetFunction> fn;
  if (config.objective == submod::ExperimentConfig::Objective::kMaxcut) {
    fn = std::make_shared<submod::MaxcutFunction>(graph);
  } else {
    fn = std::make_shared<submod::RevenueFunction>(
        graph, submod::gen_revmax_params(graph, config.revmax_seed));
  }
  if (graph.vertex_count() > 22) {
    throw submod::ConfigError("opt: instance too large for brute force (n=" +
                              std::to_string(graph.vertex_count()) + ")");
  }

  std::vector<std::size_t> ks = config.k_values;
  if (ks.empty()) ks.push_back(graph.vertex_count());
  for (std::size_t k : ks) {
    const submod::OptResult opt =
        submod::brute_force_opt(submod::ValueOracle(fn), k);
    std::cout << "k=" << k << " opt=" << submod::format_double(opt.value)
              << " set=[";
    bool first = true;
    for (submod::ElementId x : opt.set.elements()) {
      if (!first) std::cout << ' ';
      std::cout << x;
      first = false;
    }
    std::cout << "]\n";
  }
  return 0;
}

int cmd_check(const std::string& objective, std::size_t n, double p,
              std::uint64_t seed, std::uint64_t trials) {
  const submod::Graph g = submod::gen_er(n, p, seed);
  submod::ValueOracle oracle =
      objective == "maxcut"
          ? submod::maxcut_oracle(g)
          : submod::revmax_oracle(g, submod::gen_revmax_params(g, seed + 1));
  const submod::SubmodularityReport report =
      submod::check_submodular(oracle, trials, seed);
  std::cout << report.violations << " violations ("
            << report.negativity_violations << " negativity) in "
            << report.trials << " trials on " << objective << " n=" << n
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"submodular maximization benchmark runner"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "run a configured experiment sweep");
  run->add_option("--config", config_path, "experiment config file")
      ->required();

  std::size_t gen_n = 100;
  double gen_p = 0.05;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-er", "generate an ER edge list");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--p", gen_p, "edge probability")->required();
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("--out", gen_out, "output path")->required();

  std::string opt_config;
  auto* opt = app.add_subcommand("opt", "brute-force OPT of a tiny config");
  opt->add_option("--config", opt_config, "experiment config file")
      ->required();

  std::string check_objective;
  std::size_t check_n = 64;
  double check_p = 0.1;
  std::uint64_t check_seed = 7;
  std::uint64_t check_trials = 1000;
  auto* check = app.add_subcommand("check", "submodularity audit");
  check->add_option("--objective", check_objective, "maxcut or revmax")
      ->required()
      ->check(CLI::IsMember({"maxcut", "revmax"}));
  check->add_option("--n", check_n, "audit graph size");
  check->add_option("--p", check_p, "audit edge probability");
  check->add_option("--seed", check_seed, "audit seed");
  check->add_option("--trials", check_trials, "audit trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (run->parsed()) return cmd_run(config_path);
    if (gen->parsed()) return cmd_gen_er(gen_n, gen_p, gen_seed, gen_out);
    if (opt->parsed()) return cmd_opt(opt_config);
    if (check->parsed()) {
      return cmd_check(check_objective, check_n, check_p, check_seed,
                       check_trials);
    }
  } catch (const submod::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

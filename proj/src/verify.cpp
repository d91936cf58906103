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

#include "submod/verify.hpp"

#include <stdexcept>

#include "submod/bench.hpp"
#include "submod/exact.hpp"
#include "submod/graph.hpp"
#include "submod/objectives.hpp"
#include "submod/rng.hpp"

namespace submod {

std::vector<SmallInstance> small_instance_family(std::size_t min_count,
                                                 std::uint64_t seed) {
  std::vector<SmallInstance> family;
  const double ps[] = {0.3, 0.5};
  std::uint64_t round = 0;
  while (family.size() < min_count) {
    for (std::size_t n = 6; n <= 12 && family.size() < min_count; ++n) {
      for (double p : ps) {
        const std::uint64_t gseed =
            seed ^ fnv1a("maxcut:" + std::to_string(n) + ":" +
                         std::to_string(p) + ":" + std::to_string(round));
        Graph g = gen_er(n, p, gseed);
        family.push_back({"er-n" + std::to_string(n) + "-r" +
                              std::to_string(round),
                          "maxcut", std::make_shared<MaxcutFunction>(g)});
      }
    }
    for (std::size_t n = 6; n <= 10 && family.size() < min_count; ++n) {
      for (double p : ps) {
        const std::uint64_t gseed =
            seed ^ fnv1a("revmax:" + std::to_string(n) + ":" +
                         std::to_string(p) + ":" + std::to_string(round));
        Graph g = gen_er(n, p, gseed);
        family.push_back(
            {"er-n" + std::to_string(n) + "-r" + std::to_string(round),
             "revmax",
             std::make_shared<RevenueFunction>(
                 g, gen_revmax_params(g, gseed + 1))});
      }
    }
    ++round;
  }
  return family;
}

void RatioReport::write_csv(std::ostream& out) const {
  out << csv_header() << '\n';
  for (const RatioRow& row : rows) {
    write_csv_row(out, row.dataset, row.objective, row.algorithm, row.k,
                  std::to_string(row.rep), row.seed, row.value, row.queries,
                  row.rounds, row.wall_ms);
  }
}

RatioReport ratio_suite(std::span<const SmallInstance> family,
                        std::string_view algorithm,
                        std::span<const std::size_t> ks, std::size_t runs,
                        std::uint64_t seed, double bound,
                        const AlgoParams& base) {
  if (runs < 1) throw std::invalid_argument("ratio_suite: runs < 1");
  RatioReport report;
  report.bound = bound;

  const bool randomized = algorithm_is_randomized(algorithm);
  const std::size_t effective_runs = randomized ? runs : 1;
  double ratio_sum = 0.0;
  bool first = true;

  for (const SmallInstance& inst : family) {
    if (inst.fn->ground_size() > 12) {
      throw std::invalid_argument(
          "ratio_suite: instance too large for brute force");
    }
    for (std::size_t k : ks) {
      const std::size_t k_eff = std::min(k, inst.fn->ground_size());
      const OptResult opt = brute_force_opt(ValueOracle(inst.fn), k_eff);
      for (std::size_t rep = 0; rep < effective_runs; ++rep) {
        AlgoParams params = base;
        params.seed = seed ^ fnv1a(inst.dataset + ":" + inst.objective + ":" +
                                   std::string(algorithm) + ":" +
                                   std::to_string(k_eff) + ":" +
                                   std::to_string(rep));
        ValueOracle oracle{inst.fn};  // fresh ledger per run
        const RunRecord run = run_algorithm(algorithm, oracle, k_eff, params);

        RatioRow row;
        row.dataset = inst.dataset;
        row.objective = inst.objective;
        row.algorithm = std::string(algorithm);
        row.k = k_eff;
        row.rep = rep;
        row.seed = run.seed;
        row.value = run.value;
        row.opt = opt.value;
        row.ratio = opt.value > 1e-12 ? run.value / opt.value : 1.0;
        row.queries = run.queries;
        row.rounds = run.rounds;
        row.wall_ms = run.wall_ms;

        if (first || row.ratio < report.min_ratio) {
          report.min_ratio = row.ratio;
        }
        first = false;
        ratio_sum += row.ratio;
        if (bound > 0.0 && run.value < bound * opt.value - 1e-9) {
          ++report.violations;
        }
        report.rows.push_back(std::move(row));
      }
    }
  }
  if (!report.rows.empty()) {
    report.mean_ratio = ratio_sum / static_cast<double>(report.rows.size());
  }
  return report;
}

ProbeReport adaptivity_probe(std::string_view algorithm,
                             std::span<const std::size_t> sizes,
                             std::span<const std::size_t> ks, double eps,
                             std::uint64_t seed) {
  if (sizes.size() != ks.size()) {
    throw std::invalid_argument("adaptivity_probe: sizes and ks mismatch");
  }
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) {
      throw std::invalid_argument("adaptivity_probe: sizes must ascend");
    }
  }

  ProbeReport report;
  report.algorithm = std::string(algorithm);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const std::size_t n = sizes[i];
    Graph g = gen_er(n, 5.0 / static_cast<double>(n), seed ^ fnv1a(
        "probe:" + std::to_string(n)));
    ValueOracle oracle = maxcut_oracle(g);
    AlgoParams params;
    params.epsilon = eps;
    params.seed = seed + i;
    const RunRecord run = run_algorithm(algorithm, oracle, ks[i], params);
    report.rows.push_back({n, ks[i], run.queries, run.rounds, run.value});
  }
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const auto& prev = report.rows[i - 1];
    const auto& cur = report.rows[i];
    report.query_ratios.push_back(
        prev.queries > 0 ? static_cast<double>(cur.queries) /
                               static_cast<double>(prev.queries)
                         : 0.0);
    report.round_ratios.push_back(
        prev.rounds > 0 ? static_cast<double>(cur.rounds) /
                              static_cast<double>(prev.rounds)
                        : 0.0);
  }
  return report;
}

}  // namespace submod

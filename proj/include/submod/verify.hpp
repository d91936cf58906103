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

#ifndef SUBMOD_VERIFY_HPP
#define SUBMOD_VERIFY_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "submod/dispatch.hpp"
#include "submod/oracle.hpp"

namespace submod {

// One tiny benchmark instance, small enough for brute_force_opt.
struct SmallInstance {
  std::string dataset;
  std::string objective;  // "maxcut" or "revmax"
  std::shared_ptr<const SetFunction> fn;
};

// Seeded ER maxcut instances (n in [6,12], p in {0.3, 0.5}) interleaved with
// seeded revmax instances (n in [6,10], same p grid) until at least
// `min_count` exist. Deterministic in `seed`.
std::vector<SmallInstance> small_instance_family(std::size_t min_count,
                                                 std::uint64_t seed);

struct RatioRow {
  std::string dataset;
  std::string objective;
  std::string algorithm;
  std::size_t k = 0;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  double value = 0.0;
  double opt = 0.0;
  double ratio = 1.0;
  std::uint64_t queries = 0;
  std::uint64_t rounds = 0;
  double wall_ms = 0.0;
};

struct RatioReport {
  std::vector<RatioRow> rows;
  double min_ratio = 1.0;
  double mean_ratio = 1.0;
  std::size_t violations = 0;  // rows with value < bound * opt - 1e-9
  double bound = 0.0;
  // Rows in the bench CSV schema (opt and ratio folded out).
  void write_csv(std::ostream& out) const;
};

// Brute-force OPT against `runs` seeded executions of the named algorithm on
// every (instance, k) cell. Every instance must have at most 12 elements.
// Pass bound = 0 to only collect ratios.
RatioReport ratio_suite(std::span<const SmallInstance> family,
                        std::string_view algorithm,
                        std::span<const std::size_t> ks, std::size_t runs,
                        std::uint64_t seed, double bound,
                        const AlgoParams& base = {});

struct ProbeRow {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t queries = 0;
  std::uint64_t rounds = 0;
  double value = 0.0;
};

struct ProbeReport {
  std::string algorithm;
  std::vector<ProbeRow> rows;
  std::vector<double> query_ratios;  // consecutive-size growth factors
  std::vector<double> round_ratios;
};

// Runs the named algorithm on ER maxcut (p = 5/n) at each size and reports
// measured query/round growth between consecutive sizes.
ProbeReport adaptivity_probe(std::string_view algorithm,
                             std::span<const std::size_t> sizes,
                             std::span<const std::size_t> ks, double eps,
                             std::uint64_t seed);

}  // namespace submod

#endif  // SUBMOD_VERIFY_HPP

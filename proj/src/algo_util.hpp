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

// Internal helpers shared by the algorithm translation units.

#ifndef SUBMOD_SRC_ALGO_UTIL_HPP
#define SUBMOD_SRC_ALGO_UTIL_HPP

#include <chrono>
#include <cstdint>
#include <vector>

#include "submod/core.hpp"
#include "submod/oracle.hpp"

namespace submod::detail {

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

struct ScanResult {
  bool found = false;
  ElementId id = 0;
  double gain = 0.0;
  double value_after = 0.0;  // f(S + id); equals f(S) for a dummy
  bool is_dummy = false;
  std::size_t evaluated = 0;  // real candidates queried by the scan
};

// Best marginal gain among the ids of `universe` not flagged in `used`,
// ties to the lowest id. `universe` must be ascending with dummies above all
// real ids. Dummies gain exactly 0 at no query cost, so a dummy wins only
// when every available real candidate has strictly negative gain.
inline ScanResult argmax_gain(const ValueOracle& f,
                              const std::vector<ElementId>& universe,
                              const std::vector<std::uint8_t>& used,
                              const SolutionSet& s, double f_s) {
  ScanResult best;
  std::size_t evaluated = 0;
  for (ElementId x : universe) {
    if (used[x]) continue;
    if (f.is_dummy(x)) {
      if (!best.found || best.gain < 0.0) {
        best.found = true;
        best.id = x;
        best.gain = 0.0;
        best.value_after = f_s;
        best.is_dummy = true;
      }
      break;  // ascending order: later dummies lose every tie
    }
    const double after = f.evaluate_with(s, x);
    ++evaluated;
    const double gain = after - f_s;
    if (!best.found || gain > best.gain) {
      best.found = true;
      best.id = x;
      best.gain = gain;
      best.value_after = after;
      best.is_dummy = false;
    }
  }
  best.evaluated = evaluated;
  return best;
}

inline SolutionSet strip_dummies(const ValueOracle& f, const SolutionSet& s) {
  SolutionSet out;
  for (ElementId x : s.elements()) {
    if (!f.is_dummy(x)) out.insert(x);
  }
  return out;
}

struct LedgerMark {
  std::uint64_t queries = 0;
  std::uint64_t rounds = 0;
  explicit LedgerMark(const QueryLedger& ledger)
      : queries(ledger.query_count()), rounds(ledger.round_count()) {}
};

inline void finish_record(RunRecord& record, const QueryLedger& ledger,
                          const LedgerMark& mark, const Stopwatch& watch) {
  record.queries = ledger.query_count() - mark.queries;
  record.rounds = ledger.round_count() - mark.rounds;
  record.wall_ms = watch.ms();
}

}  // namespace submod::detail

#endif  // SUBMOD_SRC_ALGO_UTIL_HPP

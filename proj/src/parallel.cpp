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

#include "submod/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "algo_util.hpp"

namespace submod {

using detail::LedgerMark;
using detail::Stopwatch;

UpdateResult update(const ValueOracle& g, std::vector<ElementId> pool,
                    double tau, double eps, double tau_min) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("update: need 0 < eps < 1");
  }
  if (!(tau > 0.0)) throw std::invalid_argument("update: tau must be positive");

  const SolutionSet empty;
  UpdateResult out;
  out.tau = tau;

  // One adaptive round per filter pass.
  auto filter = [&](const std::vector<ElementId>& candidates) {
    out.pool.clear();
    out.gains.clear();
    for (ElementId x : candidates) {
      const double gain = g.evaluate_with(empty, x);
      if (gain >= out.tau) {
        out.pool.push_back(x);
        out.gains.push_back(gain);
      }
    }
    if (!candidates.empty()) g.ledger()->mark_round();
  };

  filter(pool);
  if (!out.pool.empty()) return out;

  const std::vector<ElementId> universe = g.real_universe();
  while (out.pool.empty() && out.tau >= tau_min) {
    out.tau *= (1.0 - eps);
    filter(universe);
  }
  return out;
}

std::vector<std::vector<ElementId>> distribute(
    const std::vector<std::vector<ElementId>>& sets, Rng& rng) {
  const std::size_t ell = sets.size();
  if (ell < 1) throw std::invalid_argument("distribute: no candidate sets");

  std::vector<std::size_t> order(ell);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sets[a].size() != sets[b].size()) {
      return sets[a].size() < sets[b].size();
    }
    return a < b;
  });

  std::unordered_set<ElementId> taken;
  std::vector<std::vector<ElementId>> out(ell);
  for (std::size_t j : order) {
    const std::size_t want = sets[j].size() / ell;
    std::vector<ElementId> avail;
    avail.reserve(sets[j].size());
    for (ElementId x : sets[j]) {
      if (taken.count(x) == 0) avail.push_back(x);
    }
    const std::size_t take = std::min(want, avail.size());
    out[j] = rng.sample(std::move(avail), take);
    for (ElementId x : out[j]) taken.insert(x);
  }
  return out;
}

std::vector<std::vector<ElementId>> distribute(
    const std::vector<std::vector<ElementId>>& sets, std::uint64_t seed) {
  Rng rng(seed);
  return distribute(sets, rng);
}

PrefixSelection prefix_selection(const ValueOracle& g,
                                 const std::vector<ElementId>& pool,
                                 std::size_t s, double tau, double eps,
                                 Rng& rng) {
  if (s < 1) throw std::invalid_argument("prefix_selection: s must be >= 1");

  PrefixSelection out;
  out.permuted = pool;
  rng.shuffle(out.permuted);
  const std::size_t t = std::min(s, out.permuted.size());
  out.marks.assign(t, PrefixMark::kNone);
  out.prefix_values.assign(t, 0.0);
  if (t == 0) return out;

  // All prefix marginals in one adaptive round: evaluate g on each prefix
  // and difference consecutive values.
  SolutionSet prefix;
  double prev = g.evaluate(prefix);
  for (std::size_t i = 0; i < t; ++i) {
    const double cur = g.evaluate_with(prefix, out.permuted[i]);
    const double gain = cur - prev;
    if (gain >= tau) {
      out.marks[i] = PrefixMark::kTrue;
    } else if (gain < 0.0) {
      out.marks[i] = PrefixMark::kFalse;
    }
    out.prefix_values[i] = cur;
    prefix.insert(out.permuted[i]);
    prev = cur;
  }
  g.ledger()->mark_round();

  std::size_t trues = 0;
  for (std::size_t i = 1; i <= t; ++i) {
    if (out.marks[i - 1] == PrefixMark::kTrue) ++trues;
    if (static_cast<double>(trues) >= (1.0 - eps) * static_cast<double>(i)) {
      out.i_star = i;
    }
  }
  return out;
}

PrefixSelection prefix_selection(const ValueOracle& g,
                                 const std::vector<ElementId>& pool,
                                 std::size_t s, double tau, double eps,
                                 std::uint64_t seed) {
  Rng rng(seed);
  return prefix_selection(g, pool, s, tau, eps, rng);
}

SubsetSelection select_subset(const std::vector<ElementId>& permuted,
                              std::size_t i_star_j, std::size_t i_star,
                              const std::vector<PrefixMark>& marks) {
  if (i_star > i_star_j || i_star_j > permuted.size()) {
    throw std::invalid_argument(
        "select_subset: need i_star <= i_star_j <= |pool|");
  }
  if (marks.size() < i_star_j) {
    throw std::invalid_argument("select_subset: marks shorter than prefix");
  }

  SubsetSelection out;
  out.positions.reserve(i_star);
  for (PrefixMark wanted :
       {PrefixMark::kTrue, PrefixMark::kNone, PrefixMark::kFalse}) {
    for (std::size_t pos = 0;
         pos < i_star_j && out.positions.size() < i_star; ++pos) {
      if (marks[pos] == wanted) out.positions.push_back(pos);
    }
    if (out.positions.size() == i_star) break;
  }
  if (out.positions.size() != i_star) {
    throw std::logic_error("select_subset: prefix too short to fill subset");
  }
  std::sort(out.positions.begin(), out.positions.end());
  for (std::size_t pos : out.positions) {
    out.kept.push_back(permuted[pos]);
    if (marks[pos] != PrefixMark::kFalse) {
      out.kept_filtered.push_back(permuted[pos]);
    }
  }
  return out;
}

namespace {

struct SingletonRound {
  double f_empty = 0.0;
  double max_gain = 0.0;  // over an empty universe this stays 0
};

// f(empty) plus every singleton gain, batched as one adaptive round.
SingletonRound singleton_round(const ValueOracle& f,
                               const std::vector<ElementId>& universe) {
  SingletonRound out;
  SolutionSet empty;
  out.f_empty = f.evaluate(empty);
  bool first = true;
  for (ElementId x : universe) {
    const double gain = f.evaluate_with(empty, x) - out.f_empty;
    if (first || gain > out.max_gain) out.max_gain = gain;
    first = false;
  }
  f.ledger()->mark_round();
  return out;
}

}  // namespace

PigResult parallel_interlace_greedy(const ValueOracle& oracle, std::size_t m,
                                    std::size_t ell, double tau_min,
                                    double eps, std::uint64_t seed,
                                    std::optional<double> known_max_singleton) {
  if (m < 1) throw std::invalid_argument("parallel_interlace_greedy: m < 1");
  if (ell < 2) {
    throw std::invalid_argument("parallel_interlace_greedy: need ell >= 2");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("parallel_interlace_greedy: need 0 < eps < 1");
  }
  if (!(tau_min > 0.0)) {
    throw std::invalid_argument("parallel_interlace_greedy: need tau_min > 0");
  }

  const std::vector<ElementId> universe = oracle.real_universe();
  const auto master = oracle.ledger();

  PigResult res;
  res.full.assign(ell, {});
  res.filtered.assign(ell, {});

  SolutionSet empty;
  double f_empty = 0.0;
  if (known_max_singleton.has_value()) {
    res.max_singleton = *known_max_singleton;
    f_empty = oracle.evaluate(empty);
  } else {
    const SingletonRound init = singleton_round(oracle, universe);
    res.max_singleton = init.max_gain;
    f_empty = init.f_empty;
  }
  if (res.max_singleton <= 0.0 || universe.empty()) {
    return res;  // no element ever clears a positive threshold
  }

  std::vector<SolutionSet> full(ell);
  std::vector<SolutionSet> filtered(ell);
  std::vector<double> values(ell, f_empty);  // f(A_l) under `oracle`
  std::vector<std::vector<ElementId>> pools(ell, universe);
  std::vector<std::unordered_map<ElementId, double>> pool_gains(ell);
  std::vector<double> tau(ell, res.max_singleton);
  std::vector<bool> active(ell, true);
  std::vector<std::uint8_t> claimed(universe.back() + 1, 0);
  std::size_t budget = m;
  Rng rng(seed);

  auto available = [&]() {
    std::vector<ElementId> out;
    out.reserve(universe.size());
    for (ElementId x : universe) {
      if (!claimed[x]) out.push_back(x);
    }
    return out;
  };
  auto erase_everywhere = [&](ElementId x) {
    for (std::size_t l = 0; l < ell; ++l) {
      auto it = std::lower_bound(pools[l].begin(), pools[l].end(), x);
      if (it != pools[l].end() && *it == x) pools[l].erase(it);
      pool_gains[l].erase(x);
    }
  };
  auto apply_update = [&](std::size_t l, const ValueOracle& g) {
    UpdateResult u = update(g, std::move(pools[l]), tau[l], eps, tau_min);
    pools[l] = std::move(u.pool);
    tau[l] = u.tau;
    pool_gains[l].clear();
    for (std::size_t i = 0; i < pools[l].size(); ++i) {
      pool_gains[l][pools[l][i]] = u.gains[i];
    }
  };
  auto active_indices = [&]() {
    std::vector<std::size_t> idx;
    for (std::size_t l = 0; l < ell; ++l) {
      if (active[l]) idx.push_back(l);
    }
    return idx;
  };
  auto record_iteration = [&]() {
    ++res.iterations;
    std::vector<std::size_t> sizes(ell);
    std::vector<bool> flags(ell);
    for (std::size_t l = 0; l < ell; ++l) {
      sizes[l] = full[l].size();
      flags[l] = active[l];
    }
    res.size_history.push_back(std::move(sizes));
    res.active_history.push_back(std::move(flags));
  };

  while (budget > 0) {
    std::vector<std::size_t> live = active_indices();
    if (live.empty()) break;

    // Refresh all candidate pools; the per-solution calls are independent,
    // so their rounds overlap and only the widest branch advances the clock.
    {
      const std::vector<ElementId> avail = available();
      std::uint64_t batch_queries = 0;
      std::uint64_t batch_rounds = 0;
      for (std::size_t l : live) {
        auto branch = std::make_shared<QueryLedger>();
        const ValueOracle g =
            oracle.with_ledger(branch).contract(full[l], avail, values[l]);
        apply_update(l, g);
        batch_queries += branch->query_count();
        batch_rounds = std::max(batch_rounds, branch->round_count());
      }
      master->add_queries(batch_queries);
      master->add_rounds(batch_rounds);
      for (std::size_t l : live) {
        if (tau[l] < tau_min) active[l] = false;
      }
    }
    live = active_indices();
    if (live.empty()) {
      record_iteration();
      break;
    }

    const bool small_pool =
        std::any_of(live.begin(), live.end(), [&](std::size_t l) {
          return pools[l].size() < 2 * ell;
        });

    if (small_pool) {
      // One element per solution, strictly in sequence.
      for (std::size_t l : live) {
        if (pools[l].empty()) {
          const ValueOracle g =
              oracle.contract(full[l], available(), values[l]);
          apply_update(l, g);
        }
        if (tau[l] < tau_min) {
          active[l] = false;
          continue;
        }
        const std::size_t idx =
            static_cast<std::size_t>(rng.below(pools[l].size()));
        const ElementId x = pools[l][idx];
        res.log.push_back(
            {l, x, tau[l], PrefixMark::kTrue, full[l].elements()});
        full[l].insert(x);
        filtered[l].insert(x);
        values[l] += pool_gains[l][x];
        claimed[x] = 1;
        erase_everywhere(x);
      }
      budget -= 1;
    } else {
      std::vector<std::vector<ElementId>> parts;
      parts.reserve(live.size());
      {
        std::vector<std::vector<ElementId>> inputs;
        inputs.reserve(live.size());
        for (std::size_t l : live) inputs.push_back(pools[l]);
        parts = distribute(inputs, rng);
      }
      std::size_t s = budget;
      for (const auto& part : parts) s = std::min(s, part.size());

      // Prefix selections run in parallel, one round each.
      std::vector<PrefixSelection> sel(live.size());
      {
        const std::vector<ElementId> avail = available();
        std::uint64_t batch_queries = 0;
        std::uint64_t batch_rounds = 0;
        for (std::size_t t = 0; t < live.size(); ++t) {
          const std::size_t l = live[t];
          auto branch = std::make_shared<QueryLedger>();
          const ValueOracle g =
              oracle.with_ledger(branch).contract(full[l], avail, values[l]);
          sel[t] = prefix_selection(g, parts[t], s, tau[l], eps, rng);
          batch_queries += branch->query_count();
          batch_rounds = std::max(batch_rounds, branch->round_count());
        }
        master->add_queries(batch_queries);
        master->add_rounds(batch_rounds);
      }

      std::size_t i_star = sel[0].i_star;
      for (const auto& one : sel) i_star = std::min(i_star, one.i_star);
      if (i_star == 0) {
        // update() guarantees every pool element clears tau, so the first
        // prefix position is always TRUE.
        throw std::logic_error("parallel_interlace_greedy: stalled prefix");
      }

      std::vector<std::size_t> need_value;
      for (std::size_t t = 0; t < live.size(); ++t) {
        const std::size_t l = live[t];
        const SubsetSelection ss =
            select_subset(sel[t].permuted, sel[t].i_star, i_star, sel[t].marks);
        for (std::size_t pos : ss.positions) {
          std::vector<ElementId> context = full[l].elements();
          context.insert(context.end(), sel[t].permuted.begin(),
                         sel[t].permuted.begin() + pos);
          res.log.push_back({l, sel[t].permuted[pos], tau[l],
                             sel[t].marks[pos], std::move(context)});
        }
        const bool exact_prefix =
            !ss.positions.empty() && ss.positions.back() == i_star - 1;
        for (ElementId x : ss.kept) {
          full[l].insert(x);
          claimed[x] = 1;
        }
        for (ElementId x : ss.kept_filtered) filtered[l].insert(x);
        for (ElementId x : ss.kept) erase_everywhere(x);
        if (exact_prefix) {
          values[l] += sel[t].prefix_values[i_star - 1];
        } else {
          need_value.push_back(l);
        }
      }
      if (!need_value.empty()) {
        // Re-anchor f(A_l) where the kept subset was not a plain prefix;
        // the evaluations are independent, one parallel round.
        std::uint64_t batch_queries = 0;
        for (std::size_t l : need_value) {
          auto branch = std::make_shared<QueryLedger>();
          values[l] = oracle.with_ledger(branch).evaluate(full[l]);
          batch_queries += branch->query_count();
        }
        master->add_queries(batch_queries);
        master->add_rounds(1);
      }
      budget -= i_star;
    }
    record_iteration();
  }

  res.full = std::move(full);
  res.filtered = std::move(filtered);
  return res;
}

RunRecord pig(const ValueOracle& oracle, std::size_t k, double eps,
              std::uint64_t seed) {
  const std::size_t n = oracle.real_universe_size();
  if (k < 1 || k > n) throw std::invalid_argument("pig: need 1 <= k <= n");
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("pig: need 0 < eps < 1");
  }

  Stopwatch watch;
  const LedgerMark mark(*oracle.ledger());
  const SingletonRound init = singleton_round(oracle, oracle.real_universe());

  RunRecord record;
  record.seed = seed;
  if (init.max_gain <= 0.0) {
    record.value = init.f_empty;
    detail::finish_record(record, *oracle.ledger(), mark, watch);
    return record;
  }

  const double tau_min = eps * init.max_gain / static_cast<double>(k);
  PigResult res = parallel_interlace_greedy(oracle, k, 2, tau_min, eps, seed,
                                            init.max_gain);

  const double v0 = oracle.evaluate(res.filtered[0]);
  const double v1 = oracle.evaluate(res.filtered[1]);
  oracle.ledger()->mark_round();
  if (v0 >= v1) {
    record.solution = res.filtered[0];
    record.value = v0;
  } else {
    record.solution = res.filtered[1];
    record.value = v1;
  }
  detail::finish_record(record, *oracle.ledger(), mark, watch);
  return record;
}

RunRecord parallel_interpolated_greedy(const ValueOracle& oracle,
                                       std::size_t k, std::size_t ell,
                                       double eps, std::uint64_t seed,
                                       std::vector<PigResult>* diagnostics) {
  const std::size_t n = oracle.real_universe_size();
  if (ell < 2 || ell > k) {
    throw std::invalid_argument(
        "parallel_interpolated_greedy: need 2 <= ell <= k");
  }
  if (k > n) {
    throw std::invalid_argument("parallel_interpolated_greedy: k > n");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("parallel_interpolated_greedy: bad eps");
  }

  Stopwatch watch;
  const LedgerMark mark(*oracle.ledger());
  const double eps_prime = eps / 2.0;
  const std::size_t m = k / ell;
  const std::vector<ElementId> universe = oracle.real_universe();
  const SingletonRound init = singleton_round(oracle, universe);

  RunRecord record;
  record.seed = seed;
  if (init.max_gain <= 0.0) {
    record.value = init.f_empty;
    detail::finish_record(record, *oracle.ledger(), mark, watch);
    return record;
  }

  // Proof condition of the (1/e - eps) guarantee; smaller k still runs.
  const double denom = std::exp(1.0) * eps * static_cast<double>(ell) - 4.0;
  if (denom <= 0.0 ||
      static_cast<double>(k) <
          (2.0 - eps) * (2.0 - eps) * static_cast<double>(ell) / denom) {
    std::cerr << "parallel_interpolated_greedy: k=" << k
              << " is below the analyzed regime for ell=" << ell
              << ", eps=" << eps << "\n";
  }

  const double tau_min = eps_prime * init.max_gain / static_cast<double>(k);
  SolutionSet incumbent;
  double f_incumbent = init.f_empty;
  Rng rng(seed);

  for (std::size_t i = 0; i < ell; ++i) {
    const std::uint64_t child_seed = rng.next();
    const std::size_t choice = static_cast<std::size_t>(rng.below(ell));

    std::vector<ElementId> avail;
    avail.reserve(universe.size());
    for (ElementId x : universe) {
      if (!incumbent.contains(x)) avail.push_back(x);
    }
    const ValueOracle contracted =
        oracle.contract(incumbent, avail, f_incumbent);
    PigResult res = parallel_interlace_greedy(contracted, m, ell, tau_min,
                                              eps_prime, child_seed);
    for (ElementId x : res.filtered[choice].elements()) incumbent.insert(x);
    if (diagnostics != nullptr) diagnostics->push_back(std::move(res));

    f_incumbent = oracle.evaluate(incumbent);
    oracle.ledger()->mark_round();
  }

  record.solution = incumbent;
  record.value = f_incumbent;
  detail::finish_record(record, *oracle.ledger(), mark, watch);
  return record;
}

}  // namespace submod

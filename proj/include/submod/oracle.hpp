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

#ifndef SUBMOD_ORACLE_HPP
#define SUBMOD_ORACLE_HPP

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "submod/core.hpp"

namespace submod {

// The raw set function f. Implementations must be pure: the same element set
// (in any order) always yields the same value, and evaluation must be safe to
// call from several threads at once.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual std::size_t ground_size() const = 0;
  // `elements` holds distinct ids in [0, ground_size()).
  virtual double value(std::span<const ElementId> elements) const = 0;
};

// Weighted modular function, f(S) = sum of per-element weights. With unit
// weights this is f(S) = |S|; handy as the equality case of submodularity.
class ModularFunction : public SetFunction {
 public:
  explicit ModularFunction(std::size_t n, double weight = 1.0)
      : weights_(n, weight) {}
  explicit ModularFunction(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  std::size_t ground_size() const override { return weights_.size(); }
  double value(std::span<const ElementId> elements) const override {
    double v = 0.0;
    for (ElementId x : elements) v += weights_[x];
    return v;
  }

 private:
  std::vector<double> weights_;
};

// Adapter for ad-hoc functions in tests.
class LambdaFunction : public SetFunction {
 public:
  using Fn = std::function<double(std::span<const ElementId>)>;
  LambdaFunction(std::size_t n, Fn fn) : n_(n), fn_(std::move(fn)) {}
  std::size_t ground_size() const override { return n_; }
  double value(std::span<const ElementId> elements) const override {
    return fn_(elements);
  }

 private:
  std::size_t n_;
  Fn fn_;
};

// Query-counted access to a set function, plus the two transformations the
// algorithms rely on: contraction (f restricted above a base set) and dummy
// padding (virtual ids with zero marginal gain everywhere).
//
// Views are value types. Copies and derived views share the raw function and
// the query ledger. A dummy element never reaches the raw function: its
// marginal gain is 0 by definition, which also means asking for it costs no
// query.
class ValueOracle {
 public:
  explicit ValueOracle(std::shared_ptr<const SetFunction> fn,
                       std::shared_ptr<QueryLedger> ledger = nullptr);

  std::size_t real_universe_size() const;
  std::size_t dummy_count() const { return dummy_count_; }
  // Candidate ids in ascending order: real elements, then dummies.
  std::vector<ElementId> universe() const;
  std::vector<ElementId> real_universe() const;
  bool is_dummy(ElementId x) const {
    return x >= raw_n_ && x < raw_n_ + dummy_count_;
  }

  const std::shared_ptr<QueryLedger>& ledger() const { return ledger_; }
  // Same view bound to another ledger. Used to meter a parallel batch
  // separately before folding it back into the caller's ledger.
  ValueOracle with_ledger(std::shared_ptr<QueryLedger> ledger) const;

  // f(S), one query. Dummy members are stripped before the raw call.
  double evaluate(const SolutionSet& s) const;
  // f(S + x), one query. Precondition: x not in S.
  double evaluate_with(const SolutionSet& s, ElementId x) const;

  // f(S + x) - f(S). Two queries, or one when the caller supplies f(S).
  // A dummy x costs nothing and gains nothing.
  double marginal_gain(ElementId x, const SolutionSet& s) const;
  double marginal_gain(ElementId x, const SolutionSet& s,
                       double value_of_s) const;

  // View g with g(S) = f(base | S) - f(base), candidates limited to
  // `allowed`. Requires allowed and base disjoint; shares this ledger.
  // Computing f(base) costs one query unless the caller already knows it.
  ValueOracle contract(const SolutionSet& base,
                       const std::vector<ElementId>& allowed) const;
  ValueOracle contract(const SolutionSet& base,
                       const std::vector<ElementId>& allowed,
                       double known_base_value) const;

  // Ground set extended by `count` virtual ids with zero marginal gain.
  ValueOracle with_dummies(std::size_t count) const;

 private:
  void check_real(ElementId x) const;
  double raw_value(const SolutionSet& s, const ElementId* extra) const;

  std::shared_ptr<const SetFunction> fn_;
  std::size_t raw_n_ = 0;
  std::size_t dummy_count_ = 0;
  std::vector<ElementId> base_;  // sorted
  double base_value_ = 0.0;
  bool restricted_ = false;
  std::vector<ElementId> allowed_;  // sorted, meaningful iff restricted_
  std::unordered_set<ElementId> allowed_members_;
  std::shared_ptr<QueryLedger> ledger_;
};

}  // namespace submod

#endif  // SUBMOD_ORACLE_HPP

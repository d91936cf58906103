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

#include "submod/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace submod {

ValueOracle::ValueOracle(std::shared_ptr<const SetFunction> fn,
                         std::shared_ptr<QueryLedger> ledger)
    : fn_(std::move(fn)),
      ledger_(ledger ? std::move(ledger) : std::make_shared<QueryLedger>()) {
  if (!fn_) throw std::invalid_argument("ValueOracle: null set function");
  raw_n_ = fn_->ground_size();
}

std::size_t ValueOracle::real_universe_size() const {
  return restricted_ ? allowed_.size() : raw_n_;
}

std::vector<ElementId> ValueOracle::universe() const {
  std::vector<ElementId> ids = real_universe();
  for (std::size_t d = 0; d < dummy_count_; ++d) {
    ids.push_back(static_cast<ElementId>(raw_n_ + d));
  }
  return ids;
}

std::vector<ElementId> ValueOracle::real_universe() const {
  if (restricted_) return allowed_;
  std::vector<ElementId> ids(raw_n_);
  std::iota(ids.begin(), ids.end(), ElementId{0});
  return ids;
}

ValueOracle ValueOracle::with_ledger(
    std::shared_ptr<QueryLedger> ledger) const {
  ValueOracle copy = *this;
  copy.ledger_ = ledger ? std::move(ledger) : std::make_shared<QueryLedger>();
  return copy;
}

void ValueOracle::check_real(ElementId x) const {
  if (restricted_) {
    if (allowed_members_.count(x) == 0) {
      throw std::out_of_range("ValueOracle: element " + std::to_string(x) +
                              " outside the restricted universe");
    }
  } else if (x >= raw_n_) {
    throw std::out_of_range("ValueOracle: element " + std::to_string(x) +
                            " outside the ground set");
  }
}

double ValueOracle::raw_value(const SolutionSet& s,
                              const ElementId* extra) const {
  std::vector<ElementId> buffer;
  buffer.reserve(base_.size() + s.size() + 1);
  buffer.insert(buffer.end(), base_.begin(), base_.end());
  for (ElementId x : s.elements()) {
    if (is_dummy(x)) continue;
    check_real(x);
    buffer.push_back(x);
  }
  if (extra != nullptr && !is_dummy(*extra)) {
    check_real(*extra);
    buffer.push_back(*extra);
  }
  ledger_->add_queries(1);
  return fn_->value(buffer) - base_value_;
}

double ValueOracle::evaluate(const SolutionSet& s) const {
  return raw_value(s, nullptr);
}

double ValueOracle::evaluate_with(const SolutionSet& s, ElementId x) const {
  if (s.contains(x)) {
    throw std::invalid_argument("evaluate_with: element already in the set");
  }
  return raw_value(s, &x);
}

double ValueOracle::marginal_gain(ElementId x, const SolutionSet& s) const {
  if (s.contains(x)) {
    throw std::invalid_argument("marginal_gain: element already in the set");
  }
  if (is_dummy(x)) return 0.0;
  const double with = raw_value(s, &x);
  const double without = raw_value(s, nullptr);
  return with - without;
}

double ValueOracle::marginal_gain(ElementId x, const SolutionSet& s,
                                  double value_of_s) const {
  if (s.contains(x)) {
    throw std::invalid_argument("marginal_gain: element already in the set");
  }
  if (is_dummy(x)) return 0.0;
  return raw_value(s, &x) - value_of_s;
}

ValueOracle ValueOracle::contract(const SolutionSet& base,
                                  const std::vector<ElementId>& allowed) const {
  ValueOracle g = contract(base, allowed, 0.0);
  // f(base) under this view, one query, then shift to a raw-function offset.
  g.base_value_ = 0.0;
  SolutionSet empty;
  g.base_value_ = g.raw_value(empty, nullptr);
  return g;
}

ValueOracle ValueOracle::contract(const SolutionSet& base,
                                  const std::vector<ElementId>& allowed,
                                  double known_base_value) const {
  ValueOracle g = *this;
  g.dummy_count_ = 0;

  for (ElementId x : base.elements()) {
    if (is_dummy(x)) continue;
    check_real(x);
    g.base_.push_back(x);
  }
  std::sort(g.base_.begin(), g.base_.end());
  g.base_.erase(std::unique(g.base_.begin(), g.base_.end()), g.base_.end());

  g.allowed_ = allowed;
  std::sort(g.allowed_.begin(), g.allowed_.end());
  g.allowed_.erase(std::unique(g.allowed_.begin(), g.allowed_.end()),
                   g.allowed_.end());
  g.allowed_members_.clear();
  for (ElementId x : g.allowed_) {
    check_real(x);
    if (std::binary_search(g.base_.begin(), g.base_.end(), x)) {
      throw std::invalid_argument(
          "contract: allowed set intersects the base set");
    }
    g.allowed_members_.insert(x);
  }
  g.restricted_ = true;
  // known_base_value is relative to this view; stack it on any existing
  // contraction offset so nested views flatten.
  g.base_value_ = base_value_ + known_base_value;
  return g;
}

ValueOracle ValueOracle::with_dummies(std::size_t count) const {
  ValueOracle padded = *this;
  padded.dummy_count_ += count;
  return padded;
}

}  // namespace submod

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

// Monotone non-decreasing submodular valuation oracles.
//
// Oracles are immutable after construction and queried by value on explicit
// item sets, so they can be shared across concurrent solver runs. Algorithms
// keep their own incremental state; the oracles never do.
//
// Families:
//   CappedModular        min(cap, sum of member weights); modular when uncapped
//   Activation           0-1 indicator of hitting a liked set
//   WeightedCoverage     weight of the covered element universe
//   FacilityLocationGain average reduction of per-point radius over a metric

#ifndef MSR_FUNCTIONS_HPP_
#define MSR_FUNCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msr/rational.hpp"

namespace msr {

using ItemId = int;

// Membership mask over the item universe; index == item id.
using ItemSet = std::vector<bool>;

ItemSet make_set(int universe_size, const std::vector<ItemId>& members = {});

class ValuationOracle {
 public:
  virtual ~ValuationOracle() = default;

  int universe_size() const { return universe_size_; }

  // f(S). Must satisfy f(empty) == 0, monotonicity and submodularity.
  virtual Rational value(const ItemSet& s) const = 0;

  // f(S + v) - f(S). Overridden where a single pass is cheaper.
  virtual Rational marginal(ItemId v, const ItemSet& s) const;

  // f(full universe), computed once at construction.
  const Rational& max_value() const { return max_value_; }

 protected:
  explicit ValuationOracle(int universe_size);

  // Derived constructors call this last, once their state is final.
  void cache_max_value();

  void check_set(const ItemSet& s) const;
  void check_item(ItemId v) const;

 private:
  int universe_size_;
  Rational max_value_;
};

// min(cap, sum of weights of members). No cap means plain modular.
class CappedModular : public ValuationOracle {
 public:
  CappedModular(std::vector<Rational> weights, std::optional<Rational> cap);

  Rational value(const ItemSet& s) const override;
  Rational marginal(ItemId v, const ItemSet& s) const override;

  const std::vector<Rational>& weights() const { return weights_; }
  const std::optional<Rational>& cap() const { return cap_; }

 private:
  std::vector<Rational> weights_;
  std::optional<Rational> cap_;
};

// 1 if the set intersects the liked items, else 0.
class Activation : public ValuationOracle {
 public:
  Activation(int universe_size, const std::vector<ItemId>& liked);

  Rational value(const ItemSet& s) const override;
  Rational marginal(ItemId v, const ItemSet& s) const override;

  std::vector<ItemId> liked_items() const;

 private:
  ItemSet liked_;
};

// Sum of weights of elements covered by the members' element lists.
class WeightedCoverage : public ValuationOracle {
 public:
  WeightedCoverage(int universe_size,
                   std::vector<std::vector<int>> item_elements,
                   std::vector<Rational> element_weights);

  Rational value(const ItemSet& s) const override;
  Rational marginal(ItemId v, const ItemSet& s) const override;

  const std::vector<std::vector<int>>& item_elements() const {
    return item_elements_;
  }
  const std::vector<Rational>& element_weights() const {
    return element_weights_;
  }

 private:
  std::vector<std::vector<int>> item_elements_;
  std::vector<Rational> element_weights_;
};

// Average over points of (R0 - min(R0, distance to closest member)).
// The default baseline radius R0(p) is max over items of d(p, item), which
// makes the empty set worth 0 and the full set's value positive.
class FacilityLocationGain : public ValuationOracle {
 public:
  FacilityLocationGain(std::vector<std::vector<Rational>> distances,
                       std::optional<std::vector<Rational>> baseline_radius);

  Rational value(const ItemSet& s) const override;
  Rational marginal(ItemId v, const ItemSet& s) const override;

  const std::vector<std::vector<Rational>>& distances() const {
    return distances_;
  }
  const std::vector<Rational>& baseline_radius() const { return radius_; }

 private:
  int num_points() const { return static_cast<int>(distances_.size()); }

  std::vector<std::vector<Rational>> distances_;  // [point][item]
  std::vector<Rational> radius_;                  // R0 per point
};

// Randomized audit of the standing oracle assumptions: f(empty) == 0,
// monotone, submodular, and marginal consistent with value. Samples
// (S subset-of T, v not in T) triples. Exact arithmetic; the tolerance is
// for deliberately approximate oracles and defaults to zero.
struct AuditResult {
  bool passed = true;
  std::string counterexample;  // empty when passed
};

AuditResult submodularity_audit(const ValuationOracle& oracle, int trials,
                                std::uint64_t seed,
                                const Rational& tolerance = Rational(0));

}  // namespace msr

#endif  // MSR_FUNCTIONS_HPP_

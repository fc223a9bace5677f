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

#include "msr/functions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "msr/rng.hpp"

namespace msr {

ItemSet make_set(int universe_size, const std::vector<ItemId>& members) {
  ItemSet s(universe_size, false);
  for (ItemId v : members) {
    if (v < 0 || v >= universe_size)
      throw std::out_of_range("item id out of range: " + std::to_string(v));
    s[v] = true;
  }
  return s;
}

ValuationOracle::ValuationOracle(int universe_size)
    : universe_size_(universe_size), max_value_(0) {
  if (universe_size < 0)
    throw std::invalid_argument("universe size must be non-negative");
}

void ValuationOracle::cache_max_value() {
  max_value_ = value(ItemSet(universe_size_, true));
}

void ValuationOracle::check_set(const ItemSet& s) const {
  if (static_cast<int>(s.size()) != universe_size_)
    throw std::invalid_argument("item set size does not match universe");
}

void ValuationOracle::check_item(ItemId v) const {
  if (v < 0 || v >= universe_size_)
    throw std::out_of_range("item id out of range: " + std::to_string(v));
}

Rational ValuationOracle::marginal(ItemId v, const ItemSet& s) const {
  check_item(v);
  check_set(s);
  ItemSet with = s;
  with[v] = true;
  return value(with) - value(s);
}

// ---------------------------------------------------------------------------
// CappedModular

CappedModular::CappedModular(std::vector<Rational> weights,
                             std::optional<Rational> cap)
    : ValuationOracle(static_cast<int>(weights.size())),
      weights_(std::move(weights)),
      cap_(std::move(cap)) {
  for (const Rational& w : weights_) {
    if (w < 0) throw std::invalid_argument("modular weights must be >= 0");
  }
  if (cap_ && *cap_ < 0) throw std::invalid_argument("cap must be >= 0");
  cache_max_value();
}

Rational CappedModular::value(const ItemSet& s) const {
  check_set(s);
  Rational sum = 0;
  for (int v = 0; v < universe_size(); ++v) {
    if (s[v]) sum += weights_[v];
  }
  if (cap_ && sum > *cap_) return *cap_;
  return sum;
}

Rational CappedModular::marginal(ItemId v, const ItemSet& s) const {
  check_item(v);
  check_set(s);
  if (s[v]) return Rational(0);
  if (!cap_) return weights_[v];
  Rational sum = 0;
  for (int u = 0; u < universe_size(); ++u) {
    if (s[u]) sum += weights_[u];
  }
  Rational before = sum > *cap_ ? *cap_ : sum;
  Rational grown = sum + weights_[v];
  Rational after = grown > *cap_ ? *cap_ : grown;
  return after - before;
}

// ---------------------------------------------------------------------------
// Activation

Activation::Activation(int universe_size, const std::vector<ItemId>& liked)
    : ValuationOracle(universe_size), liked_(make_set(universe_size, liked)) {
  cache_max_value();
}

Rational Activation::value(const ItemSet& s) const {
  check_set(s);
  for (int v = 0; v < universe_size(); ++v) {
    if (s[v] && liked_[v]) return Rational(1);
  }
  return Rational(0);
}

Rational Activation::marginal(ItemId v, const ItemSet& s) const {
  check_item(v);
  check_set(s);
  if (!liked_[v] || s[v]) return Rational(0);
  for (int u = 0; u < universe_size(); ++u) {
    if (s[u] && liked_[u]) return Rational(0);  // already activated
  }
  return Rational(1);
}

std::vector<ItemId> Activation::liked_items() const {
  std::vector<ItemId> out;
  for (int v = 0; v < universe_size(); ++v) {
    if (liked_[v]) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// WeightedCoverage

WeightedCoverage::WeightedCoverage(int universe_size,
                                   std::vector<std::vector<int>> item_elements,
                                   std::vector<Rational> element_weights)
    : ValuationOracle(universe_size),
      item_elements_(std::move(item_elements)),
      element_weights_(std::move(element_weights)) {
  if (static_cast<int>(item_elements_.size()) != universe_size)
    throw std::invalid_argument("one element list per item required");
  const int num_elements = static_cast<int>(element_weights_.size());
  for (const auto& list : item_elements_) {
    for (int e : list) {
      if (e < 0 || e >= num_elements)
        throw std::out_of_range("element index out of range");
    }
  }
  for (const Rational& w : element_weights_) {
    if (w < 0) throw std::invalid_argument("element weights must be >= 0");
  }
  cache_max_value();
}

Rational WeightedCoverage::value(const ItemSet& s) const {
  check_set(s);
  std::vector<bool> covered(element_weights_.size(), false);
  for (int v = 0; v < universe_size(); ++v) {
    if (!s[v]) continue;
    for (int e : item_elements_[v]) covered[e] = true;
  }
  Rational sum = 0;
  for (size_t e = 0; e < covered.size(); ++e) {
    if (covered[e]) sum += element_weights_[e];
  }
  return sum;
}

Rational WeightedCoverage::marginal(ItemId v, const ItemSet& s) const {
  check_item(v);
  check_set(s);
  if (s[v]) return Rational(0);
  std::vector<bool> covered(element_weights_.size(), false);
  for (int u = 0; u < universe_size(); ++u) {
    if (!s[u]) continue;
    for (int e : item_elements_[u]) covered[e] = true;
  }
  Rational gain = 0;
  for (int e : item_elements_[v]) {
    if (!covered[e]) {
      gain += element_weights_[e];
      covered[e] = true;  // element lists may repeat an element
    }
  }
  return gain;
}

// ---------------------------------------------------------------------------
// FacilityLocationGain

FacilityLocationGain::FacilityLocationGain(
    std::vector<std::vector<Rational>> distances,
    std::optional<std::vector<Rational>> baseline_radius)
    : ValuationOracle(distances.empty() ? 0
                                        : static_cast<int>(distances[0].size())),
      distances_(std::move(distances)) {
  for (const auto& row : distances_) {
    if (static_cast<int>(row.size()) != universe_size())
      throw std::invalid_argument("distance matrix rows must be equal length");
    for (const Rational& d : row) {
      if (d < 0) throw std::invalid_argument("distances must be >= 0");
    }
  }
  if (baseline_radius) {
    if (baseline_radius->size() != distances_.size())
      throw std::invalid_argument("one baseline radius per point required");
    radius_ = std::move(*baseline_radius);
  } else {
    radius_.reserve(distances_.size());
    for (const auto& row : distances_) {
      Rational r0 = 0;
      for (const Rational& d : row) r0 = std::max(r0, d);
      radius_.push_back(r0);
    }
  }
  cache_max_value();
}

Rational FacilityLocationGain::value(const ItemSet& s) const {
  check_set(s);
  if (num_points() == 0) return Rational(0);
  Rational sum = 0;
  for (int p = 0; p < num_points(); ++p) {
    Rational closest = radius_[p];
    for (int v = 0; v < universe_size(); ++v) {
      if (s[v] && distances_[p][v] < closest) closest = distances_[p][v];
    }
    sum += radius_[p] - closest;
  }
  return sum / num_points();
}

Rational FacilityLocationGain::marginal(ItemId v, const ItemSet& s) const {
  check_item(v);
  check_set(s);
  if (s[v] || num_points() == 0) return Rational(0);
  Rational sum = 0;
  for (int p = 0; p < num_points(); ++p) {
    Rational closest = radius_[p];
    for (int u = 0; u < universe_size(); ++u) {
      if (s[u] && distances_[p][u] < closest) closest = distances_[p][u];
    }
    if (distances_[p][v] < closest) sum += closest - distances_[p][v];
  }
  return sum / num_points();
}

// ---------------------------------------------------------------------------
// Audit

namespace {

ItemSet random_subset_of(Rng& rng, const ItemSet& base) {
  ItemSet out(base.size(), false);
  for (size_t v = 0; v < base.size(); ++v) {
    if (base[v] && rng.below(2) == 1) out[v] = true;
  }
  return out;
}

std::string describe_set(const ItemSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (size_t v = 0; v < s.size(); ++v) {
    if (!s[v]) continue;
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

AuditResult submodularity_audit(const ValuationOracle& oracle, int trials,
                                std::uint64_t seed, const Rational& tolerance) {
  if (trials < 1) throw std::invalid_argument("audit needs trials >= 1");
  const int n = oracle.universe_size();
  AuditResult result;

  if (oracle.value(ItemSet(n, false)) != 0) {
    result.passed = false;
    result.counterexample = "value(empty) != 0";
    return result;
  }
  if (n == 0) return result;

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const ItemId v = static_cast<ItemId>(rng.below(n));
    ItemSet full_minus_v(n, true);
    full_minus_v[v] = false;
    const ItemSet big = random_subset_of(rng, full_minus_v);
    const ItemSet small = random_subset_of(rng, big);

    const Rational value_small = oracle.value(small);
    const Rational value_big = oracle.value(big);
    const Rational gain_small = oracle.marginal(v, small);
    const Rational gain_big = oracle.marginal(v, big);

    std::ostringstream why;
    if (value_small > value_big + tolerance) {
      why << "monotonicity: value" << describe_set(small) << "="
          << format_rational(value_small) << " > value" << describe_set(big)
          << "=" << format_rational(value_big);
    } else if (gain_small < gain_big - tolerance) {
      why << "submodularity: marginal(" << v << "|" << describe_set(small)
          << ")=" << format_rational(gain_small) << " < marginal(" << v << "|"
          << describe_set(big) << ")=" << format_rational(gain_big);
    } else if (gain_small < -tolerance) {
      why << "negative marginal(" << v << "|" << describe_set(small)
          << ")=" << format_rational(gain_small);
    } else {
      ItemSet with = small;
      with[v] = true;
      if (oracle.value(with) - value_small != gain_small) {
        why << "marginal(" << v << "|" << describe_set(small)
            << ") inconsistent with value difference";
      }
    }
    if (!why.str().empty()) {
      result.passed = false;
      result.counterexample = "trial " + std::to_string(t) + ": " + why.str();
      return result;
    }
  }
  return result;
}

}  // namespace msr

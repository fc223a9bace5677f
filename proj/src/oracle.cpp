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

#include "msr/oracle.hpp"

#include <algorithm>
#include <memory>
#include <vector>

#include "msr/msrl_dp.hpp"

namespace msr {

namespace {

// Depth-first search over ordered sequences in ascending-id sibling order.
// Nodes are visited parents-first, so with a strictly-greater update rule the
// recorded maximizer is the lexicographically smallest one.
class SequenceSearch {
 public:
  SequenceSearch(const Instance& instance, const BruteForceGuard& guard,
                 std::vector<bool> candidates)
      : instance_(instance),
        guard_(guard),
        candidates_(std::move(candidates)),
        costs_(cost_map(instance)),
        max_budget_(instance.max_budget()),
        used_(instance.num_items(), false),
        member_set_(instance.num_items(), false) {}

  // append_gain(v, cost_before) -> objective increase of appending v.
  template <typename AppendGain>
  BruteForceResult run(const AppendGain& append_gain) {
    best_ = BruteForceResult{};
    descend(Rational(0), Rational(0), append_gain);
    best_.ranking = best_sequence_;
    best_.sequences_explored = explored_;
    return best_;
  }

 private:
  template <typename AppendGain>
  void descend(const Rational& cost, const Rational& value,
               const AppendGain& append_gain) {
    if (value > best_.value) {
      best_.value = value;
      best_sequence_ = current_;
    }
    // Any extension exceeds every budget: the objective is frozen.
    if (cost >= max_budget_) return;
    for (ItemId v = 0; v < instance_.num_items(); ++v) {
      if (used_[v] || !candidates_[v]) continue;
      if (++explored_ > guard_.max_sequences)
        throw TooLargeError("brute force guard exceeded (" +
                            std::to_string(guard_.max_sequences) +
                            " partial sequences)");
      const Rational gain = append_gain(v, cost);
      used_[v] = true;
      member_set_[v] = true;
      current_.push_back(v);
      descend(cost + costs_[v], value + gain, append_gain);
      current_.pop_back();
      member_set_[v] = false;
      used_[v] = false;
    }
  }

 public:
  const Instance& instance_;
  BruteForceGuard guard_;
  std::vector<bool> candidates_;
  std::vector<Rational> costs_;
  Rational max_budget_;
  std::vector<bool> used_;
  ItemSet member_set_;  // same contents as current_, as a mask
  Ranking current_;
  Ranking best_sequence_;
  BruteForceResult best_;
  std::uint64_t explored_ = 0;
};

}  // namespace

BruteForceResult brute_force_msr(const Instance& instance,
                                 const BruteForceGuard& guard) {
  SequenceSearch search(instance, guard,
                        std::vector<bool>(instance.num_items(), true));
  return search.run([&](ItemId v, const Rational& cost_before) {
    const Rational cost_after = cost_before + search.costs_[v];
    Rational gain = 0;
    for (const BudgetedFunction& f : instance.functions) {
      if (cost_after <= f.budget)
        gain += f.oracle->marginal(v, search.member_set_);
    }
    return gain;
  });
}

BruteForceResult brute_force_gamma(const Instance& instance,
                                   const BruteForceGuard& guard) {
  const int n = instance.num_items();
  const int m = instance.num_functions();

  // Only items large for at least one function can contribute.
  std::vector<bool> candidates(n, false);
  std::vector<std::vector<Rational>> singleton(m, std::vector<Rational>(n));
  for (int i = 0; i < m; ++i) {
    for (ItemId v = 0; v < n; ++v) {
      if (2 * instance.cost(v) <= instance.functions[i].budget) continue;
      ItemSet s(n, false);
      s[v] = true;
      singleton[i][v] = instance.functions[i].oracle->value(s);
      candidates[v] = true;
    }
  }

  SequenceSearch search(instance, guard, std::move(candidates));
  return search.run([&](ItemId v, const Rational& cost_before) {
    const Rational cost_after = cost_before + search.costs_[v];
    Rational gain = 0;
    for (int i = 0; i < m; ++i) {
      if (2 * instance.cost(v) > instance.functions[i].budget &&
          cost_after <= instance.functions[i].budget) {
        gain += singleton[i][v];
      }
    }
    return gain;
  });
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

std::shared_ptr<const ValuationOracle> modular(std::vector<Rational> weights) {
  return std::make_shared<CappedModular>(std::move(weights), std::nullopt);
}

}  // namespace

Instance fixture_example1() {
  Instance instance;
  instance.items = {{0, Rational(5, 2)}, {1, Rational(3)}, {2, Rational(13, 2)}};
  std::vector<Rational> w1(3, Rational(0)), w2(3, Rational(0));
  w1[0] = 1;
  w1[1] = Rational(3, 2);
  w2[2] = 1;
  instance.functions.push_back({modular(std::move(w1)), Rational(3), "f1"});
  instance.functions.push_back({modular(std::move(w2)), Rational(9), "f2"});
  return instance;
}

Instance fixture_tight2(int k, const Rational& eps) {
  if (k < 1) throw std::invalid_argument("tight2 needs k >= 1");
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("tight2 needs 0 < eps < 1");
  const int n = 2 * k;
  Instance instance;
  for (int v = 0; v < n; ++v) instance.items.push_back({v, Rational(1)});
  // Functions 1..k pair item i with a nearly worthless stand-in i+k; the
  // stand-ins alone carry functions k+1..2k, which bait the greedy early.
  for (int i = 1; i <= k; ++i) {
    std::vector<Rational> w(n, Rational(0));
    w[i - 1] = 1;
    w[i + k - 1] = eps;
    instance.functions.push_back({std::make_shared<CappedModular>(
                                      std::move(w), Rational(1)),
                                  Rational(i), "f" + std::to_string(i)});
  }
  for (int i = k + 1; i <= 2 * k; ++i) {
    instance.functions.push_back(
        {std::make_shared<Activation>(n, std::vector<ItemId>{i - 1}),
         Rational(i), "f" + std::to_string(i)});
  }
  return instance;
}

Instance fixture_singleton_bad(int m, const Rational& eps) {
  if (m < 1) throw std::invalid_argument("singleton_bad needs m >= 1");
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("singleton_bad needs 0 < eps < 1");
  const int n = m + 1;
  Instance instance;
  instance.items.push_back({0, eps});  // the cost-efficient decoy
  for (int v = 1; v <= m; ++v) instance.items.push_back({v, Rational(1)});
  for (int i = 1; i <= m; ++i) {
    std::vector<Rational> w(n, Rational(0));
    w[0] = 2 * eps / m;
    w[i] = 1;
    instance.functions.push_back(
        {modular(std::move(w)), Rational(i), "f" + std::to_string(i)});
  }
  return instance;
}

Instance fixture_second_bad(int m, const Rational& eps) {
  if (m < 1) throw std::invalid_argument("second_bad needs m >= 1");
  if (eps <= 0 || 2 * eps >= 1 - m * eps)
    throw std::invalid_argument("second_bad needs small positive eps");
  const int n = 2 * m;
  auto power_of_two = [](int e) {
    return Rational(BigInt(1) << e);
  };
  Instance instance;
  // Item 2(i-1) is the exclusive large item of function i; item 2(i-1)+1 the
  // half-cost, slightly less efficient alternative.
  for (int i = 1; i <= m; ++i) {
    instance.items.push_back({2 * (i - 1), power_of_two(i)});
    instance.items.push_back({2 * (i - 1) + 1, power_of_two(i - 1)});
  }
  for (int i = 1; i <= m; ++i) {
    std::vector<Rational> w(n, Rational(0));
    const Rational first = 1 - Rational(m) * eps + Rational(i) * eps;
    w[2 * (i - 1)] = first;
    w[2 * (i - 1) + 1] = first / 2 - eps;
    instance.functions.push_back(
        {modular(std::move(w)), power_of_two(i), "f" + std::to_string(i)});
  }
  return instance;
}

Instance fixture(const std::string& descriptor) {
  if (descriptor == "example1") return fixture_example1();
  const auto open = descriptor.find('(');
  const auto comma = descriptor.find(',', open);
  const auto close = descriptor.find(')', comma);
  if (open == std::string::npos || comma == std::string::npos ||
      close == std::string::npos) {
    throw std::invalid_argument("unknown fixture: '" + descriptor + "'");
  }
  const std::string name = descriptor.substr(0, open);
  const int first = std::stoi(descriptor.substr(open + 1, comma - open - 1));
  const Rational eps =
      parse_rational(descriptor.substr(comma + 1, close - comma - 1));
  if (name == "tight2") return fixture_tight2(first, eps);
  if (name == "singleton_bad") return fixture_singleton_bad(first, eps);
  if (name == "second_bad") return fixture_second_bad(first, eps);
  throw std::invalid_argument("unknown fixture: '" + descriptor + "'");
}

}  // namespace msr

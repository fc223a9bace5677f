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

#include "msr/baselines.hpp"

#include <algorithm>
#include <limits>

#include "msr/rng.hpp"

namespace msr {

namespace {

// Saturation threshold for dropping nearly-complete functions.
const Rational kSaturation(1, 1000000000);

}  // namespace

Ranking greedy_sr(const Instance& instance) {
  const int n = instance.num_items();
  const int m = instance.num_functions();
  const std::vector<Rational> costs = cost_map(instance);

  Ranking ranking;
  ItemSet prefix(n, false);
  Rational prefix_cost = 0;
  std::vector<Rational> current_value(m, Rational(0));
  std::vector<bool> used(n, false);

  for (int iteration = 0; iteration < n; ++iteration) {
    bool have_best = false;
    ItemId best_item = -1;
    Rational best_score = 0;
    for (ItemId v = 0; v < n; ++v) {
      if (used[v]) continue;
      Rational s = 0;
      for (int i = 0; i < m; ++i) {
        const BudgetedFunction& f = instance.functions[i];
        const Rational remaining = f.oracle->max_value() - current_value[i];
        if (remaining <= kSaturation) continue;
        if (!(prefix_cost < f.budget)) continue;
        if (prefix_cost + costs[v] > f.budget) continue;
        s += f.oracle->marginal(v, prefix) / remaining;
      }
      if (!have_best || s > best_score ||
          (s == best_score && v < best_item)) {
        have_best = true;
        best_item = v;
        best_score = s;
      }
    }
    if (!have_best || best_score == 0) break;
    used[best_item] = true;
    prefix[best_item] = true;
    prefix_cost += costs[best_item];
    ranking.push_back(best_item);
    for (int i = 0; i < m; ++i)
      current_value[i] = instance.functions[i].oracle->value(prefix);
  }
  return ranking;
}

Ranking greedy_min(const Instance& instance) {
  const int n = instance.num_items();
  const int m = instance.num_functions();
  if (m == 0) return {};
  const std::vector<Rational> costs = cost_map(instance);

  Rational min_budget = instance.functions[0].budget;
  for (const BudgetedFunction& f : instance.functions)
    min_budget = std::min(min_budget, f.budget);

  // Cost-efficient greedy on F = sum of f_i with the single budget.
  Ranking greedy;
  {
    ItemSet prefix(n, false);
    Rational prefix_cost = 0;
    std::vector<bool> used(n, false);
    for (int iteration = 0; iteration < n; ++iteration) {
      bool have_best = false;
      ItemId best_item = -1;
      Rational best_score = 0;
      if (!(prefix_cost < min_budget)) break;
      for (ItemId v = 0; v < n; ++v) {
        if (used[v]) continue;
        if (prefix_cost + costs[v] > min_budget) continue;
        Rational s = 0;
        for (int i = 0; i < m; ++i)
          s += instance.functions[i].oracle->marginal(v, prefix);
        s /= costs[v];
        if (!have_best || s > best_score ||
            (s == best_score && v < best_item)) {
          have_best = true;
          best_item = v;
          best_score = s;
        }
      }
      if (!have_best || best_score == 0) break;
      used[best_item] = true;
      prefix[best_item] = true;
      prefix_cost += costs[best_item];
      greedy.push_back(best_item);
    }
  }

  // Best feasible singleton by combined value, ties by id.
  Ranking singleton;
  {
    bool have_best = false;
    ItemId best_item = -1;
    Rational best_value = 0;
    for (ItemId v = 0; v < n; ++v) {
      if (costs[v] > min_budget) continue;
      ItemSet s(n, false);
      s[v] = true;
      Rational value = 0;
      for (int i = 0; i < m; ++i)
        value += instance.functions[i].oracle->value(s);
      if (!have_best || value > best_value) {
        have_best = true;
        best_item = v;
        best_value = value;
      }
    }
    if (have_best) singleton.push_back(best_item);
  }

  const Rational greedy_total = msr_objective(instance, greedy).total;
  const Rational singleton_total = msr_objective(instance, singleton).total;
  return singleton_total > greedy_total ? singleton : greedy;
}

Ranking quality_rank(const Instance& instance, bool per_cost) {
  const int n = instance.num_items();
  std::vector<Rational> quality(n, Rational(0));
  for (ItemId v = 0; v < n; ++v) {
    ItemSet s(n, false);
    s[v] = true;
    for (const BudgetedFunction& f : instance.functions)
      quality[v] += f.oracle->value(s);
    if (per_cost) quality[v] /= instance.cost(v);
  }
  Ranking ranking(n);
  for (ItemId v = 0; v < n; ++v) ranking[v] = v;
  std::stable_sort(ranking.begin(), ranking.end(), [&](ItemId a, ItemId b) {
    return quality[a] > quality[b];
  });
  return ranking;
}

Ranking random_rank(const Instance& instance, std::uint64_t seed) {
  Ranking ranking(instance.num_items());
  for (ItemId v = 0; v < instance.num_items(); ++v) ranking[v] = v;
  Rng rng(seed);
  rng.shuffle(ranking);
  return ranking;
}

}  // namespace msr

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

#include "msr/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace msr {

Rational Instance::max_budget() const {
  Rational out = 0;
  for (const BudgetedFunction& f : functions) out = std::max(out, f.budget);
  return out;
}

int prefix_index(const Ranking& order, const std::vector<Rational>& costs,
                 const Rational& budget) {
  Rational cumulative = 0;
  int idx = 0;
  for (ItemId v : order) {
    cumulative += costs.at(v);
    if (cumulative > budget) break;
    ++idx;
  }
  return idx;
}

std::vector<Rational> cost_map(const Instance& instance) {
  std::vector<Rational> costs(instance.num_items());
  for (const Item& item : instance.items) costs.at(item.id) = item.cost;
  return costs;
}

void require_valid_ranking(const Instance& instance, const Ranking& ranking) {
  std::vector<bool> seen(instance.num_items(), false);
  for (ItemId v : ranking) {
    if (v < 0 || v >= instance.num_items())
      throw std::invalid_argument("ranking refers to unknown item id " +
                                  std::to_string(v));
    if (seen[v])
      throw std::invalid_argument("ranking repeats item id " +
                                  std::to_string(v));
    seen[v] = true;
  }
}

Evaluation msr_objective(const Instance& instance, const Ranking& ranking) {
  require_valid_ranking(instance, ranking);
  const std::vector<Rational> costs = cost_map(instance);
  const int m = instance.num_functions();

  Evaluation eval;
  eval.prefix_index.resize(m, 0);
  eval.per_function_value.assign(m, Rational(0));
  eval.total = 0;
  for (int i = 0; i < m; ++i) {
    eval.prefix_index[i] =
        prefix_index(ranking, costs, instance.functions[i].budget);
  }

  // Grow one prefix set and evaluate each function at its own cut.
  ItemSet prefix(instance.num_items(), false);
  for (int depth = 0; depth <= static_cast<int>(ranking.size()); ++depth) {
    if (depth > 0) prefix[ranking[depth - 1]] = true;
    for (int i = 0; i < m; ++i) {
      if (eval.prefix_index[i] != depth) continue;
      eval.per_function_value[i] = instance.functions[i].oracle->value(prefix);
      eval.total += eval.per_function_value[i];
    }
  }
  return eval;
}

std::vector<std::string> validate_instance(const Instance& instance) {
  std::vector<std::string> violations;
  if (instance.items.empty()) violations.push_back("empty item list");

  std::vector<int> id_count(instance.items.size(), 0);
  for (const Item& item : instance.items) {
    if (item.cost <= 0)
      violations.push_back("non-positive cost for item " +
                           std::to_string(item.id));
    if (item.id < 0 || item.id >= static_cast<int>(instance.items.size())) {
      violations.push_back("item id " + std::to_string(item.id) +
                           " outside dense range [0, n)");
    } else if (++id_count[item.id] > 1) {
      violations.push_back("duplicate item id " + std::to_string(item.id));
    }
  }

  const ItemSet empty(instance.num_items(), false);
  for (int i = 0; i < instance.num_functions(); ++i) {
    const BudgetedFunction& f = instance.functions[i];
    const std::string name =
        f.label.empty() ? "function " + std::to_string(i) : f.label;
    if (f.budget < 0) violations.push_back("negative budget for " + name);
    if (!f.oracle) {
      violations.push_back("missing oracle for " + name);
      continue;
    }
    if (f.oracle->universe_size() != instance.num_items()) {
      violations.push_back("oracle universe mismatch for " + name);
      continue;
    }
    if (f.oracle->value(empty) != 0)
      violations.push_back("value(empty) != 0 for " + name);
  }
  return violations;
}

}  // namespace msr

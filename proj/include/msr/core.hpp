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

// Problem instance: costed items plus budgeted valuation functions, and the
// objective. A ranking is scored by handing every function the maximal prefix
// whose total cost fits the function's own budget; the objective is the sum
// of the functions' values on their prefixes. Rankings may be partial: once
// every budget is exhausted the remaining positions cannot matter.

#ifndef MSR_CORE_HPP_
#define MSR_CORE_HPP_

#include <memory>
#include <string>
#include <vector>

#include "msr/functions.hpp"
#include "msr/rational.hpp"

namespace msr {

struct Item {
  ItemId id = 0;
  Rational cost;  // strictly positive; unit cost = 1
};

struct BudgetedFunction {
  std::shared_ptr<const ValuationOracle> oracle;
  Rational budget;  // non-negative
  std::string label;
};

struct Instance {
  std::vector<Item> items;
  std::vector<BudgetedFunction> functions;

  int num_items() const { return static_cast<int>(items.size()); }
  int num_functions() const { return static_cast<int>(functions.size()); }

  // Requires ids contiguous from 0 (validate_instance checks this).
  const Rational& cost(ItemId id) const { return items.at(id).cost; }

  // Largest budget, 0 when there are no functions.
  Rational max_budget() const;
};

// An ordered sequence of distinct item ids; may be shorter than the catalog.
using Ranking = std::vector<ItemId>;

struct Evaluation {
  std::vector<int> prefix_index;           // idx per function
  std::vector<Rational> per_function_value;
  Rational total;
};

// Largest j such that the first j entries of `order` cost at most `budget`;
// 0 when even the first item does not fit. `costs` is indexed by item id.
int prefix_index(const Ranking& order, const std::vector<Rational>& costs,
                 const Rational& budget);

std::vector<Rational> cost_map(const Instance& instance);

// Throws std::invalid_argument on duplicate or unknown ids.
void require_valid_ranking(const Instance& instance, const Ranking& ranking);

Evaluation msr_objective(const Instance& instance, const Ranking& ranking);

// Structural checks: non-empty catalog, dense ids, positive costs,
// non-negative budgets, oracles over the right universe with f(empty) == 0.
// Returns human-readable violations; empty means the instance is well formed.
std::vector<std::string> validate_instance(const Instance& instance);

}  // namespace msr

#endif  // MSR_CORE_HPP_

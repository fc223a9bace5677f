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

// Large-item ranking by dynamic programming.
//
// An item is "large" for a function when twice its cost exceeds the
// function's budget, so the function can afford at most one such item.
// The large-item objective of a ranking is
//
//   gamma(pi) = sum over positions j of
//               sum over functions i with 2*cost(v_j) > budget_i and
//               cost(prefix through j) <= budget_i of value_i({v_j})
//
// Under non-uniform costs the cost-efficient greedy can be starved of large
// items, so gamma is maximized separately: values are scaled by K = P*eps/m
// and floored to integers (losing at most an eps fraction), items are sorted
// by cost, and a table T(val, j) = cheapest cost of a subsequence of the
// first j items achieving rounded value >= val is filled column by column.
// best_of() keeps the better of the greedy ranking and the DP ranking under
// the real objective.

#ifndef MSR_MSRL_DP_HPP_
#define MSR_MSRL_DP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msr/core.hpp"
#include "msr/greedy.hpp"

namespace msr {

// Indices of functions taking v as a large item when appended to a prefix of
// the given cost: { i : 2*cost(v) > budget_i and prefix_cost + cost(v) <= budget_i }.
std::vector<int> large_functions(const Instance& instance, ItemId v,
                                 const Rational& prefix_cost);

// The large-item objective of a ranking, in exact arithmetic.
Rational gamma_value(const Instance& instance, const Ranking& ranking);

// Item ids sorted by non-decreasing cost, ties by id (stable).
std::vector<ItemId> sort_for_dp(const Instance& instance);

struct RoundedInstance {
  bool no_large_items = false;     // no (function, item) pair is large
  Rational rounding_unit = 1;      // K; singleton values floored to f/K
  Rational max_large_singleton = 0;  // P = max value over large pairs
  Rational epsilon = 0;            // 0 for exact integer instances
  std::int64_t value_cap = 0;      // grid bound k; rounded gamma <= value_cap
  // values[i][v] = floor(value_i({v}) / K) when (i, v) is large, else 0.
  std::vector<std::vector<std::int64_t>> values;
};

// FPTAS rounding: P = max singleton value over large pairs; K = P*eps/m;
// grid bound k = ceil(m^2/eps). Requires 0 < eps < 1. When P == 0 the
// returned instance has no_large_items set and the DP is pointless.
RoundedInstance round_instance(const Instance& instance, const Rational& eps);

// Identity rounding (K = 1) for instances whose large singleton values are
// already integers; value_cap is the sum of per-function maxima. Throws if a
// large pair has a fractional value.
RoundedInstance exact_integer_rounding(const Instance& instance);

// Rounded-gamma of an arbitrary ranking.
std::int64_t gamma_rounded(const Instance& instance,
                           const RoundedInstance& rounded,
                           const Ranking& ranking);

struct DpOptions {
  bool keep_table = false;        // retain the full cost table for inspection
  bool check_invariants = false;  // verify table monotonicity per column
};

struct DpTableDump {
  std::vector<ItemId> item_order;  // column j holds item_order[j]
  // cost[j][val]; nullopt = unreachable.
  std::vector<std::vector<std::optional<Rational>>> cost;
};

struct DpResult {
  Ranking ranking;                 // in non-decreasing cost order
  std::int64_t rounded_value = 0;  // achieved grid value
  std::uint64_t table_updates = 0; // inner-loop entry touches
  std::optional<DpTableDump> table;
};

DpResult dp_solve(const Instance& instance, const RoundedInstance& rounded,
                  const DpOptions& options = {});

// val,j,cost rows for reachable entries.
std::string dp_table_csv(const DpTableDump& dump);

struct BestOfResult {
  Ranking ranking;
  Rational objective = 0;
  Ranking greedy_ranking;
  Rational greedy_objective = 0;
  Ranking dp_ranking;
  Rational dp_objective = 0;
  bool dp_used = false;  // DP ranking was strictly better
};

// Runs the uniform cost-efficient greedy and the rounded DP, evaluates both
// rankings under the real objective, and returns the better one (the greedy
// ranking on ties).
BestOfResult best_of(const Instance& instance, const Rational& eps);

}  // namespace msr

#endif  // MSR_MSRL_DP_HPP_

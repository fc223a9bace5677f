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

// Cost-efficient greedy ranking. Each iteration appends the item maximizing
//
//   (1/cost(v)) * sum over functions i with cost(prefix) < budget_i and
//                 cost(prefix) + cost(v) <= budget_i
//                 of kappa_i * marginal_i(v | prefix)
//
// with kappa_i = 1 (uniform) or kappa_i = 1/budget_i (inverse-budget, which
// favors functions that can only afford a short prefix). The run stops once
// every candidate scores zero: no feasible function has a positive marginal
// left, so any suffix would leave the objective unchanged.
//
// The lazy path keeps candidates in a max-heap keyed by their last computed
// score. Scores only decrease across iterations (marginals shrink by
// submodularity and the feasible-function set shrinks as the prefix grows),
// so a stale score is a valid upper bound and only heap heads need
// re-evaluation. Lazy and naive runs produce identical rankings and traces
// under every tie-break rule.

#ifndef MSR_GREEDY_HPP_
#define MSR_GREEDY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "msr/core.hpp"

namespace msr {

enum class CoefficientScheme {
  kUniform,        // kappa_i = 1
  kInverseBudget,  // kappa_i = 1/budget_i; requires every budget > 0
};

enum class TieBreak {
  kLowestId,      // default, reproducible
  kHighestId,     // adversarial; realizes worst-case instances
  kSeededRandom,  // seeded static priority permutation over items
};

struct GreedyOptions {
  CoefficientScheme scheme = CoefficientScheme::kUniform;
  TieBreak tiebreak = TieBreak::kLowestId;
  bool lazy = true;
  std::uint64_t seed = 0;  // used by kSeededRandom only
};

enum class GreedyStop {
  kZeroScore,       // best candidate scored 0
  kItemsExhausted,  // every item was appended
};

struct GreedyStep {
  int iteration = 0;  // 1-based
  ItemId item = 0;
  Rational score;
  Rational cumulative_cost;     // cost of the prefix including `item`
  int unsaturated_count = 0;    // functions with cost(prefix before) < budget
};

struct GreedyResult {
  Ranking ranking;
  std::vector<GreedyStep> steps;
  GreedyStop stop_reason = GreedyStop::kItemsExhausted;
  bool budgets_exhausted = false;  // no function was unsaturated at the stop
  // Work counters; not part of the trace (lazy and naive traces are equal,
  // their counters are not).
  std::uint64_t score_evaluations = 0;
  std::uint64_t marginal_evaluations = 0;
};

// The selection score of candidate v against the given prefix.
Rational greedy_score(const Instance& instance, const Ranking& prefix,
                      ItemId v, CoefficientScheme scheme);

GreedyResult run_greedy(const Instance& instance, const GreedyOptions& options);

// iteration,item,score,cost,unsaturated; scores and costs in exact form.
std::string trace_to_csv(const GreedyResult& result);

}  // namespace msr

#endif  // MSR_GREEDY_HPP_

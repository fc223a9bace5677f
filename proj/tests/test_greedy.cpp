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

#include "msr/greedy.hpp"

#include <memory>

#include "doctest.h"
#include "msr/checks.hpp"
#include "msr/oracle.hpp"
#include "msr/rng.hpp"

using msr::CoefficientScheme;
using msr::GreedyOptions;
using msr::GreedyResult;
using msr::Instance;
using msr::Ranking;
using msr::Rational;
using msr::TieBreak;

TEST_CASE("selection scores of the worked example") {
  const Instance example = msr::fixture_example1();
  CHECK(msr::greedy_score(example, {}, 1, CoefficientScheme::kUniform) ==
        Rational(1, 2));  // 1.5 / 3
  CHECK(msr::greedy_score(example, {}, 0, CoefficientScheme::kUniform) ==
        Rational(2, 5));  // 1 / 2.5
  CHECK(msr::greedy_score(example, {}, 2, CoefficientScheme::kUniform) ==
        Rational(2, 13));  // 1 / 6.5
  // After the middle item, nothing feasible has a positive marginal.
  CHECK(msr::greedy_score(example, {1}, 0, CoefficientScheme::kUniform) == 0);
  CHECK(msr::greedy_score(example, {1}, 2, CoefficientScheme::kUniform) == 0);
}

TEST_CASE("candidates that bust every remaining budget score zero") {
  Instance instance;
  instance.items = {{0, Rational(2)}, {1, Rational(10)}};
  std::vector<Rational> w{Rational(1), Rational(100)};
  instance.functions.push_back(
      {std::make_shared<msr::CappedModular>(w, std::nullopt), Rational(4),
       "f"});
  CHECK(msr::greedy_score(instance, {}, 1, CoefficientScheme::kUniform) == 0);
}

TEST_CASE("scores on the k=1 adversarial instance") {
  const Instance tight = msr::fixture_tight2(1, Rational(1, 100));
  // Item 1 carries its own function plus the decoy share of function 0.
  CHECK(msr::greedy_score(tight, {}, 1, CoefficientScheme::kUniform) ==
        Rational(101, 100));
  CHECK(msr::greedy_score(tight, {}, 0, CoefficientScheme::kUniform) ==
        Rational(1));
}

TEST_CASE("the worked example trips the cost-efficient greedy") {
  const Instance example = msr::fixture_example1();
  GreedyOptions options;
  const GreedyResult result = run_greedy(example, options);
  REQUIRE(!result.ranking.empty());
  CHECK(result.ranking.front() == 1);
  CHECK(msr_objective(example, result.ranking).total == Rational(3, 2));
  CHECK(result.stop_reason == msr::GreedyStop::kZeroScore);
}

TEST_CASE("k=1 adversarial instance yields half the optimum") {
  const Rational eps(1, 100);
  const Instance tight = msr::fixture_tight2(1, eps);
  GreedyOptions options;
  options.tiebreak = TieBreak::kHighestId;
  const GreedyResult result = run_greedy(tight, options);
  CHECK(msr_objective(tight, result.ranking).total == 1 + eps);
  CHECK(brute_force_msr(tight).value == Rational(2));
}

TEST_CASE("single function with unit costs is the classic greedy prefix") {
  const int n = 6;
  Instance instance;
  for (int v = 0; v < n; ++v) instance.items.push_back({v, Rational(1)});
  msr::WeightedCoverage coverage(
      n,
      {{0, 1, 2}, {2, 3}, {4}, {0, 4, 5}, {5}, {1}},
      std::vector<Rational>(6, Rational(1)));
  instance.functions.push_back(
      {std::make_shared<msr::WeightedCoverage>(coverage), Rational(3), "f"});

  GreedyOptions options;
  const GreedyResult result = run_greedy(instance, options);

  // Classic greedy on the same oracle, by hand.
  msr::ItemSet prefix(n, false);
  Ranking expected;
  for (int step = 0; step < 3; ++step) {
    int best = -1;
    Rational best_gain = 0;
    for (int v = 0; v < n; ++v) {
      if (prefix[v]) continue;
      const Rational gain = coverage.marginal(v, prefix);
      if (best == -1 || gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    if (best_gain == 0) break;
    expected.push_back(best);
    prefix[best] = true;
  }
  CHECK(result.ranking == expected);
}

TEST_CASE("lazy and naive runs are identical, including traces") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance instance =
        seed % 2 == 0 ? msr::checks::random_unit_instance(seed)
                      : msr::checks::random_knapsack_instance(seed, false);
    for (TieBreak tiebreak :
         {TieBreak::kLowestId, TieBreak::kHighestId, TieBreak::kSeededRandom}) {
      for (CoefficientScheme scheme :
           {CoefficientScheme::kUniform, CoefficientScheme::kInverseBudget}) {
        GreedyOptions naive;
        naive.scheme = scheme;
        naive.tiebreak = tiebreak;
        naive.seed = seed;
        naive.lazy = false;
        GreedyOptions lazy = naive;
        lazy.lazy = true;

        const GreedyResult a = run_greedy(instance, naive);
        const GreedyResult b = run_greedy(instance, lazy);
        REQUIRE(a.ranking == b.ranking);
        REQUIRE(a.steps.size() == b.steps.size());
        for (size_t i = 0; i < a.steps.size(); ++i) {
          CHECK(a.steps[i].item == b.steps[i].item);
          CHECK(a.steps[i].score == b.steps[i].score);
          CHECK(a.steps[i].cumulative_cost == b.steps[i].cumulative_cost);
          CHECK(a.steps[i].unsaturated_count == b.steps[i].unsaturated_count);
        }
        CHECK(a.stop_reason == b.stop_reason);
        CHECK(b.marginal_evaluations <= a.marginal_evaluations);
      }
    }
  }
}

TEST_CASE("zero-score stops are sound: suffixes change nothing") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const Instance instance = msr::checks::random_knapsack_instance(seed, false);
    GreedyOptions options;
    const GreedyResult result = run_greedy(instance, options);
    if (result.stop_reason != msr::GreedyStop::kZeroScore) continue;
    const Rational stopped = msr_objective(instance, result.ranking).total;
    Ranking extended = result.ranking;
    std::vector<bool> used(instance.num_items(), false);
    for (msr::ItemId v : extended) used[v] = true;
    for (msr::ItemId v = 0; v < instance.num_items(); ++v) {
      if (!used[v]) extended.push_back(v);
    }
    CHECK(msr_objective(instance, extended).total == stopped);
  }
}

TEST_CASE("inverse-budget weighting refuses zero budgets") {
  Instance instance = msr::fixture_example1();
  instance.functions[0].budget = 0;
  GreedyOptions options;
  options.scheme = CoefficientScheme::kInverseBudget;
  CHECK_THROWS_AS(run_greedy(instance, options), std::invalid_argument);
}

TEST_CASE("traces record strictly increasing cost and serialize to csv") {
  const Instance instance = msr::checks::random_knapsack_instance(7, false);
  GreedyOptions options;
  const GreedyResult result = run_greedy(instance, options);
  Rational last = 0;
  for (const auto& step : result.steps) {
    CHECK(step.cumulative_cost > last);
    last = step.cumulative_cost;
  }
  const std::string csv = trace_to_csv(result);
  CHECK(csv.rfind("iteration,item,score,cost,unsaturated\n", 0) == 0);
  size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == result.steps.size() + 1);
}

TEST_CASE("approximation guarantees hold on a quick random sample") {
  for (std::uint64_t seed = 500; seed < 530; ++seed) {
    const Instance instance = msr::checks::random_unit_instance(seed);
    const Rational opt = brute_force_msr(instance).value;
    GreedyOptions uniform;
    const Rational greedy =
        msr_objective(instance, run_greedy(instance, uniform).ranking).total;
    CHECK(2 * greedy >= opt);
    GreedyOptions weighted;
    weighted.scheme = CoefficientScheme::kInverseBudget;
    const Rational wgreedy =
        msr_objective(instance, run_greedy(instance, weighted).ranking).total;
    CHECK(3 * wgreedy >= opt);
  }
}

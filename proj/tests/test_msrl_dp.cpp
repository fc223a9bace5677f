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

#include "msr/msrl_dp.hpp"

#include <memory>

#include "doctest.h"
#include "msr/checks.hpp"
#include "msr/ingest.hpp"
#include "msr/oracle.hpp"
#include "msr/rng.hpp"

using msr::Instance;
using msr::Ranking;
using msr::Rational;
using msr::RoundedInstance;

namespace {

Instance scaled_example() {
  // The worked example with every function value doubled: singleton values
  // become the integers 2, 3, 2.
  Instance instance = msr::fixture_example1();
  std::vector<Rational> w1(3, Rational(0)), w2(3, Rational(0));
  w1[0] = 2;
  w1[1] = 3;
  w2[2] = 2;
  instance.functions[0].oracle =
      std::make_shared<msr::CappedModular>(w1, std::nullopt);
  instance.functions[1].oracle =
      std::make_shared<msr::CappedModular>(w2, std::nullopt);
  return instance;
}

}  // namespace

TEST_CASE("large-function sets of the worked example") {
  const Instance example = msr::fixture_example1();
  CHECK(large_functions(example, 0, Rational(0)) == std::vector<int>{0});
  CHECK(large_functions(example, 2, Rational(5, 2)) == std::vector<int>{1});
  // The middle item is large for f1 (6 > 3) and still affordable first.
  CHECK(large_functions(example, 1, Rational(0)) == std::vector<int>{0});

  Instance small;
  small.items = {{0, Rational(1)}};
  std::vector<Rational> w{Rational(1)};
  small.functions.push_back(
      {std::make_shared<msr::CappedModular>(w, std::nullopt), Rational(5),
       "f"});
  CHECK(large_functions(small, 0, Rational(0)).empty());
}

TEST_CASE("gamma of the worked example") {
  const Instance example = msr::fixture_example1();
  CHECK(gamma_value(example, {0, 2}) == Rational(2));
  // The middle item alone is a large, feasible item for f1.
  CHECK(gamma_value(example, {1}) == Rational(3, 2));
  CHECK(gamma_value(example, {}) == 0);
}

TEST_CASE("items sort by cost with ties in id order") {
  const Instance example = msr::fixture_example1();
  CHECK(sort_for_dp(example) == std::vector<msr::ItemId>{0, 1, 2});

  Instance ties;
  ties.items = {{0, Rational(2)}, {1, Rational(1)}, {2, Rational(2)}};
  CHECK(sort_for_dp(ties) == std::vector<msr::ItemId>{1, 0, 2});
}

TEST_CASE("rounding the worked example at eps = 1/10") {
  const Instance example = msr::fixture_example1();
  const RoundedInstance rounded = round_instance(example, Rational(1, 10));
  CHECK_FALSE(rounded.no_large_items);
  CHECK(rounded.max_large_singleton == Rational(3, 2));
  CHECK(rounded.rounding_unit == Rational(3, 40));  // 1.5 * 0.1 / 2
  CHECK(rounded.values[0][0] == 13);
  CHECK(rounded.values[0][1] == 20);
  CHECK(rounded.values[1][2] == 13);
  CHECK(rounded.value_cap == 40);  // ceil(m^2/eps)
}

TEST_CASE("rounding floors against K = P*eps/m") {
  // Two functions; values 1 and 9/10 on one large item. P = 1, K = 1/4.
  Instance instance;
  instance.items = {{0, Rational(2)}};
  std::vector<Rational> wa{Rational(1)}, wb{Rational(9, 10)};
  instance.functions.push_back(
      {std::make_shared<msr::CappedModular>(wa, std::nullopt), Rational(3),
       "a"});
  instance.functions.push_back(
      {std::make_shared<msr::CappedModular>(wb, std::nullopt), Rational(3),
       "b"});
  const RoundedInstance rounded = round_instance(instance, Rational(1, 2));
  CHECK(rounded.rounding_unit == Rational(1, 4));
  CHECK(rounded.values[0][0] == 4);
  CHECK(rounded.values[1][0] == 3);  // floor(0.9 / 0.25)

  CHECK_THROWS_AS(round_instance(instance, Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(round_instance(instance, Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("instances without large items short-circuit") {
  Instance instance;
  instance.items = {{0, Rational(1)}, {1, Rational(1)}};
  std::vector<Rational> w{Rational(1), Rational(1)};
  instance.functions.push_back(
      {std::make_shared<msr::CappedModular>(w, std::nullopt), Rational(4),
       "f"});
  const RoundedInstance rounded = round_instance(instance, Rational(1, 10));
  CHECK(rounded.no_large_items);
  const msr::DpResult dp = dp_solve(instance, rounded);
  CHECK(dp.ranking.empty());
  CHECK(dp.rounded_value == 0);
}

TEST_CASE("the integer-scaled worked example solves to (0, 2)") {
  const Instance instance = scaled_example();
  const RoundedInstance exact = exact_integer_rounding(instance);
  msr::DpOptions options;
  options.keep_table = true;
  options.check_invariants = true;
  const msr::DpResult dp = dp_solve(instance, exact, options);
  CHECK(dp.rounded_value == 4);
  CHECK(dp.ranking == Ranking{0, 2});
  CHECK(gamma_value(instance, dp.ranking) == Rational(4));

  REQUIRE(dp.table.has_value());
  const std::string csv = dp_table_csv(*dp.table);
  CHECK(csv.rfind("val,j,cost\n", 0) == 0);
  // T(4, 3) = 9: both large items taken.
  CHECK(csv.find("4,3,9\n") != std::string::npos);
}

TEST_CASE("a lone large item is taken iff it fits its budget") {
  Instance instance;
  instance.items = {{0, Rational(3)}};
  std::vector<Rational> w{Rational(2)};
  instance.functions.push_back(
      {std::make_shared<msr::CappedModular>(w, std::nullopt), Rational(5),
       "f"});
  msr::DpResult dp = dp_solve(instance, exact_integer_rounding(instance));
  CHECK(dp.ranking == Ranking{0});
  CHECK(dp.rounded_value == 2);

  instance.functions[0].budget = Rational(2);  // large but unaffordable
  dp = dp_solve(instance, exact_integer_rounding(instance));
  CHECK(dp.ranking.empty());
  CHECK(dp.rounded_value == 0);
}

TEST_CASE("the table matches exhaustive search on random integer instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance instance = msr::checks::random_knapsack_instance(seed, true);
    const msr::DpResult dp =
        dp_solve(instance, exact_integer_rounding(instance),
                 msr::DpOptions{false, true});
    const auto opt = brute_force_gamma(instance);
    CHECK(Rational(dp.rounded_value) == opt.value);
    CHECK(gamma_value(instance, dp.ranking) == opt.value);
  }
}

TEST_CASE("dropping an item preceded by a costlier one never hurts gamma") {
  msr::Rng rng(4);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance instance = msr::checks::random_knapsack_instance(seed, false);
    Ranking ranking(instance.num_items());
    for (int v = 0; v < instance.num_items(); ++v) ranking[v] = v;
    rng.shuffle(ranking);
    for (size_t pos = 1; pos < ranking.size(); ++pos) {
      bool preceded_by_costlier = false;
      for (size_t before = 0; before < pos; ++before) {
        if (instance.cost(ranking[before]) >= instance.cost(ranking[pos]))
          preceded_by_costlier = true;
      }
      if (!preceded_by_costlier) continue;
      Ranking without = ranking;
      without.erase(without.begin() + pos);
      CHECK(gamma_value(instance, without) >= gamma_value(instance, ranking));
    }
  }
}

TEST_CASE("the per-item contribution is non-increasing in the prefix cost") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance instance = msr::checks::random_knapsack_instance(seed, false);
    for (msr::ItemId v = 0; v < instance.num_items(); ++v) {
      Rational last = -1;
      for (int c = 12; c >= 0; --c) {  // descending cost, contribution grows
        Rational g = 0;
        for (int i : large_functions(instance, v, Rational(c))) {
          msr::ItemSet s(instance.num_items(), false);
          s[v] = true;
          g += instance.functions[i].oracle->value(s);
        }
        CHECK(g >= last);
        last = g;
      }
    }
  }
}

TEST_CASE("gamma never exceeds the ranking objective") {
  msr::Rng rng(12);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance instance = msr::checks::random_knapsack_instance(seed, false);
    Ranking ranking(instance.num_items());
    for (int v = 0; v < instance.num_items(); ++v) ranking[v] = v;
    rng.shuffle(ranking);
    CHECK(msr_objective(instance, ranking).total >=
          gamma_value(instance, ranking));
  }
}

TEST_CASE("rounded values lose at most an eps fraction") {
  for (const Rational& eps :
       {Rational(1, 2), Rational(1, 10), Rational(1, 100)}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Instance instance = msr::checks::random_knapsack_instance(seed, true);
      const RoundedInstance rounded = round_instance(instance, eps);
      const auto opt = brute_force_gamma(instance);
      if (rounded.no_large_items) {
        CHECK(opt.value == 0);
        continue;
      }
      // Loss bound on the true optimum.
      const Rational scaled =
          rounded.rounding_unit *
          gamma_rounded(instance, rounded, opt.ranking);
      CHECK(scaled >= (1 - eps) * opt.value);
      // And the solved ranking comes within the same factor.
      const msr::DpResult dp = dp_solve(instance, rounded);
      CHECK(gamma_value(instance, dp.ranking) >= (1 - eps) * opt.value);
    }
  }
}

TEST_CASE("best-of prefers the table on the worked example") {
  const Instance example = msr::fixture_example1();
  const msr::BestOfResult best = best_of(example, Rational(1, 10));
  CHECK(best.dp_used);
  CHECK(best.ranking == Ranking{0, 2});
  CHECK(best.objective == Rational(2));
  CHECK(best.greedy_objective == Rational(3, 2));
  CHECK(best.dp_objective == Rational(2));
}

TEST_CASE("best-of falls back to greedy without large items") {
  Instance instance;
  instance.items = {{0, Rational(1)}, {1, Rational(1)}};
  std::vector<Rational> w{Rational(2), Rational(1)};
  instance.functions.push_back(
      {std::make_shared<msr::CappedModular>(w, std::nullopt), Rational(4),
       "f"});
  const msr::BestOfResult best = best_of(instance, Rational(1, 10));
  CHECK_FALSE(best.dp_used);
  CHECK(best.dp_ranking.empty());
  CHECK(best.ranking == best.greedy_ranking);
}

TEST_CASE("combined guarantee on a quick random sample") {
  const Rational eps(1, 10);
  const Rational bound = 3 + 1 / (1 - eps);  // 37/9
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance instance = msr::checks::random_knapsack_instance(seed, false);
    const Rational opt = brute_force_msr(instance).value;
    const msr::BestOfResult best = best_of(instance, eps);
    CHECK(bound * best.objective >= opt);
  }
}

TEST_CASE("table updates scale linearly in the item count") {
  msr::ScenarioConfig scenario;
  scenario.max_budget = 12;
  scenario.cost_mode = msr::CostMode::kUniformInt;
  scenario.seed = 5;
  const Instance small = msr::gen_synthetic(60, 8, 0.2, scenario);
  const Instance large = msr::gen_synthetic(120, 8, 0.2, scenario);
  const Rational eps(1, 10);
  const auto dp_small = dp_solve(small, round_instance(small, eps));
  const auto dp_large = dp_solve(large, round_instance(large, eps));
  const double ratio = static_cast<double>(dp_large.table_updates) /
                       static_cast<double>(dp_small.table_updates);
  CHECK(ratio > 1.8);
  CHECK(ratio < 2.2);
}

TEST_CASE("golden table of the integer-scaled worked example") {
  // Hand-derived by following the recurrence on items sorted by cost
  // (5/2, 3, 13/2) with singleton values 2, 3, 2 and budgets 3, 9.
  const Instance instance = scaled_example();
  msr::DpOptions options;
  options.keep_table = true;
  const msr::DpResult dp =
      dp_solve(instance, exact_integer_rounding(instance), options);
  REQUIRE(dp.table.has_value());
  CHECK(dp_table_csv(*dp.table) ==
        "val,j,cost\n"
        "0,1,0\n"
        "1,1,5/2\n"
        "2,1,5/2\n"
        "0,2,0\n"
        "1,2,5/2\n"
        "2,2,5/2\n"
        "3,2,3\n"
        "0,3,0\n"
        "1,3,5/2\n"
        "2,3,5/2\n"
        "3,3,3\n"
        "4,3,9\n");
}

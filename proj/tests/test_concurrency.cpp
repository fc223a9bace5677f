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

// Instances and oracles are immutable after construction; solver runs own
// all mutable state. These smoke tests drive many runs against one shared
// instance from several threads and require identical results.

#include <thread>
#include <vector>

#include "doctest.h"
#include "msr/checks.hpp"
#include "msr/greedy.hpp"
#include "msr/msrl_dp.hpp"

using msr::Instance;
using msr::Rational;

TEST_CASE("concurrent solver runs on one shared instance agree") {
  const Instance instance = msr::checks::random_knapsack_instance(3, true);
  msr::GreedyOptions options;
  const msr::Ranking expected_greedy = run_greedy(instance, options).ranking;
  const msr::DpResult expected_dp =
      dp_solve(instance, exact_integer_rounding(instance));
  const Rational expected_total =
      msr_objective(instance, expected_greedy).total;

  std::vector<int> mismatches(8, 0);
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      for (int round = 0; round < 25; ++round) {
        if (run_greedy(instance, options).ranking != expected_greedy)
          ++mismatches[t];
        if (msr_objective(instance, expected_greedy).total != expected_total)
          ++mismatches[t];
        const msr::DpResult dp =
            dp_solve(instance, exact_integer_rounding(instance));
        if (dp.rounded_value != expected_dp.rounded_value ||
            dp.ranking != expected_dp.ranking)
          ++mismatches[t];
      }
    });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t) CHECK(mismatches[t] == 0);
}

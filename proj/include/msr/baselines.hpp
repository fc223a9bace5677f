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

// Comparison baselines built on the same instance and ranking contracts.

#ifndef MSR_BASELINES_HPP_
#define MSR_BASELINES_HPP_

#include <cstdint>

#include "msr/core.hpp"

namespace msr {

// Greedy that favors functions near completion: each iteration appends the
// item maximizing the sum over unsaturated, budget-feasible functions of
// marginal_i(v | prefix) / (max_value_i - value_i(prefix)). Functions within
// 1e-9 of their maximum are dropped from the sum.
Ranking greedy_sr(const Instance& instance);

// Collapses the instance to a single function F = sum of f_i with budget
// min_i b_i, then returns the better (under the original objective) of the
// cost-efficient greedy ranking for F and the best feasible singleton.
Ranking greedy_min(const Instance& instance);

// Items in non-increasing quality, ties by id. Quality is the sum of
// singleton values, divided by the item cost when per_cost is set (the
// meaningful variant under non-uniform costs).
Ranking quality_rank(const Instance& instance, bool per_cost = true);

// Uniform random permutation; fully determined by the seed.
Ranking random_rank(const Instance& instance, std::uint64_t seed);

}  // namespace msr

#endif  // MSR_BASELINES_HPP_

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

// Dataset loaders and seeded synthetic generators. Everything is
// deterministic given the input files and the scenario seed; the draw order
// is documented in the README so seeds stay meaningful.

#ifndef MSR_INGEST_HPP_
#define MSR_INGEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "msr/core.hpp"

namespace msr {

enum class CostMode {
  kUnit,            // every item costs 1
  kUniformInt,      // uniform integer in [1, 10]
  kDocumentLength,  // token count of the document (coverage loader only)
};

enum class BudgetMode {
  kUniformInt,        // uniform integer in [1, max_budget]
  kScaledByMeanCost,  // uniform integer in [1, max_budget], times mean cost
};

struct ScenarioConfig {
  int max_budget = 1;
  CostMode cost_mode = CostMode::kUnit;
  BudgetMode budget_mode = BudgetMode::kUniformInt;
  std::uint64_t seed = 0;
};

// CSV with header "user,item,count": one activation function per user over
// the items they consumed more than `like_threshold` times. Users whose
// liked set is empty are dropped with a note on stderr. Throws DataError
// with the offending line number on malformed rows.
Instance load_activation_instance(const std::string& triples_path,
                                  int like_threshold,
                                  const ScenarioConfig& config);

// Topics file: one whitespace-separated keyword list per line. Documents
// file: one whitespace-separated token list per line. One coverage function
// per topic valued at the fraction of its keywords present in the selected
// documents.
Instance load_coverage_instance(const std::string& topics_path,
                                const std::string& documents_path,
                                const ScenarioConfig& config);

// Points file: CSV rows of floats, one per data point. Items are the points
// themselves; each feature subset yields one facility-location-gain function
// using Euclidean distance restricted to those columns.
Instance load_facility_instance(
    const std::string& points_path,
    const std::vector<std::vector<int>>& feature_subsets,
    const ScenarioConfig& config);

// m activation functions over n items, each item liked independently with
// probability `density`. Users who end up liking nothing are dropped.
Instance gen_synthetic(int n, int m, double density,
                       const ScenarioConfig& config);

}  // namespace msr

#endif  // MSR_INGEST_HPP_

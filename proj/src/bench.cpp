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

#include "msr/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "msr/baselines.hpp"
#include "msr/msrl_dp.hpp"

namespace msr {

namespace {

std::string shortest_double(double x) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, end);
}

}  // namespace

const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names = {
      "greedy",   "wgreedy",   "dp",      "bestof",
      "greedysr", "greedymin", "quality", "random"};
  return names;
}

Ranking run_algorithm(const std::string& name, const Instance& instance,
                      std::uint64_t seed, const Rational& eps,
                      TieBreak tiebreak, bool lazy) {
  if (name == "greedy" || name == "wgreedy") {
    GreedyOptions options;
    options.scheme = name == "greedy" ? CoefficientScheme::kUniform
                                      : CoefficientScheme::kInverseBudget;
    options.tiebreak = tiebreak;
    options.lazy = lazy;
    options.seed = seed;
    return run_greedy(instance, options).ranking;
  }
  if (name == "dp") {
    const RoundedInstance rounded = round_instance(instance, eps);
    if (rounded.no_large_items) return {};
    return dp_solve(instance, rounded).ranking;
  }
  if (name == "bestof") return best_of(instance, eps).ranking;
  if (name == "greedysr") return greedy_sr(instance);
  if (name == "greedymin") return greedy_min(instance);
  if (name == "quality") return quality_rank(instance);
  if (name == "random") return random_rank(instance, seed);
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::vector<RunRecord> run_bench(const BenchConfig& config) {
  if (config.repetitions < 1)
    throw std::invalid_argument("repetitions must be >= 1");
  for (const std::string& name : config.algorithms) {
    if (std::find(known_algorithms().begin(), known_algorithms().end(),
                  name) == known_algorithms().end())
      throw std::invalid_argument("unknown algorithm '" + name + "'");
  }

  std::vector<RunRecord> records;
  for (std::size_t b = 0; b < config.budget_maxes.size(); ++b) {
    for (int rep = 0; rep < config.repetitions; ++rep) {
      const std::uint64_t seed =
          config.base_seed + b * static_cast<std::uint64_t>(config.repetitions) +
          static_cast<std::uint64_t>(rep);
      ScenarioConfig scenario;
      scenario.max_budget = config.budget_maxes[b];
      scenario.cost_mode = config.cost_mode;
      scenario.seed = seed;
      const Instance instance =
          gen_synthetic(config.n, config.m, config.density, scenario);

      for (const std::string& name : config.algorithms) {
        RunRecord record;
        record.algorithm = name;
        record.seed = seed;
        record.max_budget = config.budget_maxes[b];
        const auto start = std::chrono::steady_clock::now();
        record.ranking = run_algorithm(name, instance, seed, config.eps);
        const auto stop = std::chrono::steady_clock::now();
        record.wall_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        record.objective = msr_objective(instance, record.ranking).total;
        record.ranking_len = static_cast<int>(record.ranking.size());
        records.push_back(std::move(record));
      }
    }
  }
  std::sort(records.begin(), records.end(),
            [](const RunRecord& a, const RunRecord& b) {
              if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
              if (a.seed != b.seed) return a.seed < b.seed;
              return a.max_budget < b.max_budget;
            });
  return records;
}

void write_bench_csv(const std::vector<RunRecord>& records, std::ostream& os,
                     bool with_timings) {
  os << "algorithm,seed,max_budget,objective,ranking_len";
  if (with_timings) os << ",wall_ms";
  os << "\n";
  for (const RunRecord& r : records) {
    os << r.algorithm << "," << r.seed << "," << r.max_budget << ","
       << shortest_double(to_double(r.objective)) << "," << r.ranking_len;
    if (with_timings) os << "," << shortest_double(r.wall_ms);
    os << "\n";
  }
}

std::string bench_summary(const std::vector<RunRecord>& records) {
  std::map<std::pair<std::string, int>, std::vector<double>> groups;
  for (const RunRecord& r : records)
    groups[{r.algorithm, r.max_budget}].push_back(to_double(r.objective));

  std::ostringstream os;
  os << "algorithm        budget  mean objective  std\n";
  for (const auto& [key, values] : groups) {
    double mean = 0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    os << key.first << std::string(17 - std::min<size_t>(17, key.first.size()), ' ')
       << key.second << "\t" << shortest_double(mean) << "\t"
       << shortest_double(std::sqrt(var)) << "\n";
  }
  return os.str();
}

}  // namespace msr

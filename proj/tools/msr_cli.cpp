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

// Command-line front end.
//
//   msr solve <instance.json> --algo <name> [...]   rank one instance
//   msr bench [...]                                 seeded synthetic sweeps
//   msr check <approx|dp|fixtures|audit>            verification suites
//
// Exit codes: 0 ok, 1 usage error, 2 data error, 3 check failure.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "msr/baselines.hpp"
#include "msr/bench.hpp"
#include "msr/checks.hpp"
#include "msr/greedy.hpp"
#include "msr/ingest.hpp"
#include "msr/instance_io.hpp"
#include "msr/msrl_dp.hpp"
#include "msr/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitCheckFailed = 3;

msr::TieBreak parse_tiebreak(const std::string& name) {
  if (name == "lowest") return msr::TieBreak::kLowestId;
  if (name == "highest") return msr::TieBreak::kHighestId;
  if (name == "random") return msr::TieBreak::kSeededRandom;
  throw CLI::ValidationError("--tie-break must be lowest, highest or random");
}

msr::CostMode parse_cost_mode(const std::string& name) {
  if (name == "unit") return msr::CostMode::kUnit;
  if (name == "uniform") return msr::CostMode::kUniformInt;
  throw CLI::ValidationError("--cost-mode must be unit or uniform");
}

struct SolveArgs {
  std::string instance_path;
  std::string algorithm = "greedy";
  std::string eps = "0.1";
  std::string tiebreak = "lowest";
  std::uint64_t seed = 0;
  bool lazy = true;
  bool as_json = false;
  std::string trace_out;
};

int cmd_solve(const SolveArgs& args) {
  const msr::Instance instance = msr::load_instance(args.instance_path);
  const auto violations = msr::validate_instance(instance);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "invalid instance: " << v << "\n";
    return kExitData;
  }
  const msr::Rational eps = msr::parse_rational(args.eps);
  const msr::TieBreak tiebreak = parse_tiebreak(args.tiebreak);

  if (args.algorithm == "wgreedy") {
    for (const auto& f : instance.functions) {
      if (f.budget <= 0) {
        std::cerr << "refused: wgreedy requires every budget > 0\n";
        return kExitData;
      }
    }
  }

  msr::Ranking ranking;
  if (!args.trace_out.empty() &&
      (args.algorithm == "greedy" || args.algorithm == "wgreedy")) {
    msr::GreedyOptions options;
    options.scheme = args.algorithm == "greedy"
                         ? msr::CoefficientScheme::kUniform
                         : msr::CoefficientScheme::kInverseBudget;
    options.tiebreak = tiebreak;
    options.lazy = args.lazy;
    options.seed = args.seed;
    const msr::GreedyResult result = msr::run_greedy(instance, options);
    std::ofstream trace(args.trace_out);
    if (!trace) {
      std::cerr << "cannot write trace file: " << args.trace_out << "\n";
      return kExitData;
    }
    trace << msr::trace_to_csv(result);
    ranking = result.ranking;
  } else {
    ranking = msr::run_algorithm(args.algorithm, instance, args.seed, eps,
                                 tiebreak, args.lazy);
  }

  const msr::Evaluation eval = msr::msr_objective(instance, ranking);
  if (args.as_json) {
    nlohmann::json out;
    out["algorithm"] = args.algorithm;
    out["ranking"] = ranking;
    out["total"] = msr::format_rational(eval.total);
    out["prefix_index"] = eval.prefix_index;
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : eval.per_function_value)
      values.push_back(msr::format_rational(v));
    out["per_function_value"] = std::move(values);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "ranking:";
  for (msr::ItemId v : ranking) std::cout << " " << v;
  std::cout << "\n";
  for (int i = 0; i < instance.num_functions(); ++i) {
    std::cout << "  " << instance.functions[i].label << ": value "
              << msr::format_rational(eval.per_function_value[i])
              << " at prefix " << eval.prefix_index[i] << "\n";
  }
  std::cout << "total: " << msr::format_rational(eval.total) << "\n";
  return kExitOk;
}

struct BenchArgs {
  int n = 100;
  int m = 20;
  double density = 0.05;
  std::vector<int> budget_maxes = {4};
  int reps = 1;
  std::uint64_t seed = 0;
  std::string cost_mode = "unit";
  std::vector<std::string> algorithms;
  std::string eps = "0.1";
  std::string out_path;
  bool timings = false;
};

int cmd_bench(const BenchArgs& args) {
  msr::BenchConfig config;
  config.n = args.n;
  config.m = args.m;
  config.density = args.density;
  config.budget_maxes = args.budget_maxes;
  config.repetitions = args.reps;
  config.base_seed = args.seed;
  config.cost_mode = parse_cost_mode(args.cost_mode);
  if (!args.algorithms.empty()) config.algorithms = args.algorithms;
  config.eps = msr::parse_rational(args.eps);

  const std::vector<msr::RunRecord> records = msr::run_bench(config);
  if (!args.out_path.empty()) {
    std::ofstream out(args.out_path);
    if (!out) {
      std::cerr << "cannot write csv file: " << args.out_path << "\n";
      return kExitData;
    }
    msr::write_bench_csv(records, out, args.timings);
  } else {
    msr::write_bench_csv(records, std::cout, args.timings);
  }
  std::cerr << msr::bench_summary(records);
  return kExitOk;
}

int cmd_check(const std::string& suite) {
  msr::checks::CheckReport report;
  if (suite == "approx") {
    report = msr::checks::check_approx();
  } else if (suite == "dp") {
    report = msr::checks::check_dp();
  } else if (suite == "fixtures") {
    report = msr::checks::check_fixtures();
  } else if (suite == "audit") {
    report = msr::checks::check_audit();
  } else {
    std::cerr << "unknown suite '" << suite
              << "' (expected approx, dp, fixtures or audit)\n";
    return kExitUsage;
  }
  for (const auto& line : report.lines) std::cout << "  " << line << "\n";
  std::cout << (report.passed ? "PASS" : "FAIL") << " " << report.name << "\n";
  return report.passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-submodular ranking toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "rank one instance file");
  solve->add_option("instance", solve_args.instance_path, "instance JSON path")
      ->required();
  solve->add_option("--algo", solve_args.algorithm, "algorithm")
      ->check(CLI::IsMember(msr::known_algorithms()))
      ->capture_default_str();
  solve->add_option("--eps", solve_args.eps, "rounding epsilon for dp/bestof")
      ->capture_default_str();
  solve->add_option("--seed", solve_args.seed, "seed for random tie-breaks")
      ->capture_default_str();
  solve->add_option("--tie-break", solve_args.tiebreak,
                    "lowest | highest | random")
      ->check(CLI::IsMember({"lowest", "highest", "random"}))
      ->capture_default_str();
  solve->add_flag("--lazy,!--no-lazy", solve_args.lazy,
                  "lazy greedy evaluation (default on)");
  solve->add_flag("--json", solve_args.as_json, "machine-readable output");
  solve->add_option("--trace-out", solve_args.trace_out,
                    "write the greedy trace CSV here");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "seeded synthetic sweeps");
  bench->add_option("--n", bench_args.n, "items")->capture_default_str();
  bench->add_option("--m", bench_args.m, "functions")->capture_default_str();
  bench->add_option("--density", bench_args.density, "liked density")
      ->capture_default_str();
  bench->add_option("--budget-max", bench_args.budget_maxes,
                    "max budget sweep values")
      ->capture_default_str();
  bench->add_option("--reps", bench_args.reps, "repetitions per budget")
      ->capture_default_str();
  bench->add_option("--seed", bench_args.seed, "base seed")
      ->capture_default_str();
  bench->add_option("--cost-mode", bench_args.cost_mode, "unit | uniform")
      ->check(CLI::IsMember({"unit", "uniform"}))
      ->capture_default_str();
  bench->add_option("--algos", bench_args.algorithms,
                    "algorithms to run (default all)");
  bench->add_option("--eps", bench_args.eps, "rounding epsilon")
      ->capture_default_str();
  bench->add_option("--out", bench_args.out_path, "CSV output path");
  bench->add_flag("--timings", bench_args.timings,
                  "include wall_ms in the CSV (breaks byte determinism)");

  std::string suite;
  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", suite, "approx | dp | fixtures | audit")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (bench->parsed()) return cmd_bench(bench_args);
    if (check->parsed()) return cmd_check(suite);
  } catch (const msr::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

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

// End-to-end acceptance harness. Runs every release criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exits non-zero if
// any criterion fails.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "msr/baselines.hpp"
#include "msr/bench.hpp"
#include "msr/checks.hpp"
#include "msr/greedy.hpp"
#include "msr/ingest.hpp"
#include "msr/msrl_dp.hpp"
#include "msr/oracle.hpp"
#include "msr/rng.hpp"

namespace {

using msr::Instance;
using msr::Ranking;
using msr::Rational;
using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string name;
  bool passed = true;
  std::vector<std::string> details;
  double wall_ms = 0;

  void fail(const std::string& why) {
    passed = false;
    details.push_back(why);
  }
  void note(const std::string& line) { details.push_back(line); }
  void limit_ms(double limit) {
    if (wall_ms > limit) {
      fail("took " + std::to_string(wall_ms) + " ms, limit " +
           std::to_string(limit) + " ms");
    }
  }
};

std::string ratio_string(const Rational& num, const Rational& den) {
  std::ostringstream os;
  os << "(" << msr::format_rational(num) << ")/(" << msr::format_rational(den)
     << ") = " << msr::to_double(num / den);
  return os.str();
}

// Mixed-family instance sized for the lazy-evaluation comparison:
// n in [10, 50], m in [1, 20], integer costs, budgets wide enough for the
// greedy to run several iterations.
Instance random_wide_instance(std::uint64_t seed) {
  msr::Rng rng(seed);
  const int n = static_cast<int>(rng.range(10, 50));
  const int m = static_cast<int>(rng.range(1, 20));
  const bool unit_costs = rng.below(2) == 0;

  Instance instance;
  for (int v = 0; v < n; ++v) {
    instance.items.push_back(
        {v, unit_costs ? Rational(1) : Rational(rng.range(1, 10))});
  }
  for (int i = 0; i < m; ++i) {
    std::shared_ptr<const msr::ValuationOracle> oracle;
    switch (rng.below(3)) {
      case 0: {
        std::vector<msr::ItemId> liked;
        while (liked.empty()) {
          for (msr::ItemId v = 0; v < n; ++v) {
            if (rng.below(8) == 0) liked.push_back(v);
          }
        }
        oracle = std::make_shared<msr::Activation>(n, liked);
        break;
      }
      case 1: {
        std::vector<Rational> weights;
        for (int v = 0; v < n; ++v)
          weights.push_back(Rational(rng.range(0, 6), 2));
        std::optional<Rational> cap;
        if (rng.below(2) == 0) cap = Rational(rng.range(2, 8));
        oracle = std::make_shared<msr::CappedModular>(std::move(weights), cap);
        break;
      }
      default: {
        const int elements = static_cast<int>(rng.range(3, 8));
        std::vector<std::vector<int>> item_elements(n);
        for (int v = 0; v < n; ++v) {
          for (int e = 0; e < elements; ++e) {
            if (rng.below(3) == 0) item_elements[v].push_back(e);
          }
        }
        std::vector<Rational> weights(elements, Rational(1, elements));
        oracle = std::make_shared<msr::WeightedCoverage>(
            n, std::move(item_elements), std::move(weights));
      }
    }
    const int max_budget = unit_costs ? n : 4 * n;
    instance.functions.push_back({std::move(oracle),
                                  Rational(rng.range(1, max_budget)),
                                  "f" + std::to_string(i)});
  }
  return instance;
}

// --------------------------------------------------------------------------

void criterion_1_example_exactness(Criterion& c) {
  const Instance example = msr::fixture_example1();
  msr::GreedyOptions options;
  const Rational greedy =
      msr_objective(example, run_greedy(example, options).ranking).total;
  if (greedy != Rational(3, 2))
    c.fail("greedy objective " + msr::format_rational(greedy) + " != 3/2");

  const msr::RoundedInstance rounded =
      round_instance(example, Rational(1, 10));
  const msr::DpResult dp = dp_solve(example, rounded);
  const Rational dp_objective = msr_objective(example, dp.ranking).total;
  if (dp_objective != 2)
    c.fail("dp objective " + msr::format_rational(dp_objective) + " != 2");

  const msr::BestOfResult best = best_of(example, Rational(1, 10));
  if (best.objective != 2)
    c.fail("best_of objective " + msr::format_rational(best.objective) +
           " != 2");
  if (best.ranking != Ranking{0, 2}) c.fail("best_of ranking is not (0, 2)");
  c.note("greedy 3/2, dp 2, best_of 2 via (0, 2), exact");
}

void criteria_2_and_4_approximation(Criterion& two, Criterion& four) {
  const int count = 200;
  Rational worst_greedy(1), worst_wgreedy(1);
  for (int seed = 0; seed < count; ++seed) {
    const Instance instance = msr::checks::random_unit_instance(seed);
    const Rational opt = brute_force_msr(instance).value;

    msr::GreedyOptions uniform;
    const Rational greedy =
        msr_objective(instance, run_greedy(instance, uniform).ranking).total;
    if (2 * greedy < opt)
      two.fail("seed " + std::to_string(seed) + ": greedy below OPT/2, " +
               ratio_string(greedy, opt));

    msr::GreedyOptions weighted;
    weighted.scheme = msr::CoefficientScheme::kInverseBudget;
    const Rational wgreedy =
        msr_objective(instance, run_greedy(instance, weighted).ranking).total;
    if (3 * wgreedy < opt)
      four.fail("seed " + std::to_string(seed) + ": wgreedy below OPT/3, " +
                ratio_string(wgreedy, opt));

    if (opt > 0) {
      worst_greedy = std::min(worst_greedy, Rational(greedy / opt));
      worst_wgreedy = std::min(worst_wgreedy, Rational(wgreedy / opt));
    }
  }
  two.note("200 instances, zero violations, worst greedy/OPT = " +
           std::to_string(msr::to_double(worst_greedy)));
  four.note("200 instances, zero violations, worst wgreedy/OPT = " +
            std::to_string(msr::to_double(worst_wgreedy)));
}

void criterion_3_tightness(Criterion& c) {
  const int k = 50;
  const Instance tight = msr::fixture_tight2(k, Rational(1, 1000));

  // Each function tops out at 1 and the identity ranking collects them all,
  // so the optimum is exactly m = 2k = 100.
  Rational value_roof = 0;
  for (const auto& f : tight.functions) value_roof += f.oracle->max_value();
  if (value_roof != Rational(100))
    c.fail("sum of function maxima is " + msr::format_rational(value_roof) +
           ", not 100");
  Ranking identity(tight.num_items());
  for (int v = 0; v < tight.num_items(); ++v) identity[v] = v;
  const Rational opt = msr_objective(tight, identity).total;
  if (opt != Rational(100))
    c.fail("identity ranking scores " + msr::format_rational(opt) +
           ", not the optimum 100");

  msr::GreedyOptions adversarial;
  adversarial.tiebreak = msr::TieBreak::kHighestId;
  const Rational greedy =
      msr_objective(tight, run_greedy(tight, adversarial).ranking).total;
  if (greedy / opt > Rational(51, 100))
    c.fail("adversarial greedy ratio " + ratio_string(greedy, opt) +
           " above 0.51");
  c.note("OPT = 100 exactly; adversarial greedy/OPT = " +
         ratio_string(greedy, opt));
}

void criterion_5_dp_exactness(Criterion& c) {
  const int count = 100;
  for (int seed = 0; seed < count; ++seed) {
    const Instance instance = msr::checks::random_knapsack_instance(seed, true);
    const msr::DpResult dp =
        dp_solve(instance, exact_integer_rounding(instance),
                 msr::DpOptions{false, /*check_invariants=*/true});
    const auto opt = brute_force_gamma(instance);
    if (Rational(dp.rounded_value) != opt.value) {
      c.fail("seed " + std::to_string(seed) + ": table " +
             std::to_string(dp.rounded_value) + " != exhaustive " +
             msr::format_rational(opt.value));
    } else if (gamma_value(instance, dp.ranking) != opt.value) {
      c.fail("seed " + std::to_string(seed) +
             ": ranking does not realize the table value");
    }
  }
  c.note("100 integer knapsack instances, table == exhaustive optimum");
}

void criterion_6_fptas_bound(Criterion& c) {
  const std::vector<Rational> epsilons = {Rational(1, 2), Rational(1, 10),
                                          Rational(1, 100)};
  int checked = 0;
  for (int seed = 0; seed < 100; ++seed) {
    const Instance instance = msr::checks::random_knapsack_instance(seed, true);
    const auto opt = brute_force_gamma(instance);
    for (const Rational& eps : epsilons) {
      const msr::RoundedInstance rounded = round_instance(instance, eps);
      if (rounded.no_large_items) {
        if (opt.value != 0)
          c.fail("seed " + std::to_string(seed) +
                 ": rounding claims no large items but gamma* > 0");
        continue;
      }
      // Rounding the exhaustive optimum loses at most an eps fraction.
      const Rational scaled = rounded.rounding_unit *
                              gamma_rounded(instance, rounded, opt.ranking);
      if (scaled < (1 - eps) * opt.value)
        c.fail("seed " + std::to_string(seed) + " eps " +
               msr::format_rational(eps) + ": K*gamma'(opt) = " +
               msr::format_rational(scaled) + " < (1-eps)*gamma*");
      // And the solved ranking is within the same factor of gamma*.
      const msr::DpResult dp = dp_solve(instance, rounded);
      const Rational achieved = gamma_value(instance, dp.ranking);
      if (achieved < (1 - eps) * opt.value)
        c.fail("seed " + std::to_string(seed) + " eps " +
               msr::format_rational(eps) + ": solved gamma " +
               msr::format_rational(achieved) + " < (1-eps)*gamma*");
      ++checked;
    }
  }
  c.note(std::to_string(checked) + " (instance, eps) pairs within the bound");
}

void criterion_7_combined_bound(Criterion& c) {
  const Rational eps(1, 10);
  const Rational factor = 3 + 1 / (1 - eps);  // 37/9
  for (int seed = 1000; seed < 1100; ++seed) {
    const Instance instance =
        msr::checks::random_knapsack_instance(seed, false);
    const Rational opt = brute_force_msr(instance).value;
    const msr::BestOfResult best = best_of(instance, eps);
    if (factor * best.objective < opt)
      c.fail("seed " + std::to_string(seed) + ": best_of " +
             ratio_string(best.objective, opt) + " below 9/37");
  }
  c.note("100 random knapsack instances within the combined bound");

  struct FixtureCase {
    const char* name;
    Instance instance;
  };
  const std::vector<FixtureCase> fixtures = {
      {"singleton_bad(5,1/100)",
       msr::fixture_singleton_bad(5, Rational(1, 100))},
      {"second_bad(4,1/100)", msr::fixture_second_bad(4, Rational(1, 100))},
  };
  for (const auto& fc : fixtures) {
    const Rational opt = brute_force_msr(fc.instance).value;
    const msr::BestOfResult best = best_of(fc.instance, eps);
    if (factor * best.objective < opt)
      c.fail(std::string(fc.name) + ": best_of " +
             ratio_string(best.objective, opt) + " below 9/37");
    const Rational baseline =
        msr_objective(fc.instance, msr::greedy_min(fc.instance)).total;
    c.note(std::string(fc.name) + ": OPT = " + msr::format_rational(opt) +
           ", greedymin/OPT = " + ratio_string(baseline, opt) +
           ", best_of = " + msr::format_rational(best.objective));
    if (3 * baseline >= opt)
      c.fail(std::string(fc.name) + ": greedy_min " +
             ratio_string(baseline, opt) + " is not below OPT/3");
  }
}

void criterion_8_lazy_equivalence(Criterion& c) {
  const int count = 50;
  int strictly_fewer = 0;
  for (int seed = 0; seed < count; ++seed) {
    const Instance instance = random_wide_instance(seed);
    msr::GreedyOptions naive;
    naive.lazy = false;
    msr::GreedyOptions lazy;
    lazy.lazy = true;
    const msr::GreedyResult a = run_greedy(instance, naive);
    const msr::GreedyResult b = run_greedy(instance, lazy);

    bool same = a.ranking == b.ranking && a.steps.size() == b.steps.size() &&
                a.stop_reason == b.stop_reason;
    for (size_t i = 0; same && i < a.steps.size(); ++i) {
      same = a.steps[i].item == b.steps[i].item &&
             a.steps[i].score == b.steps[i].score &&
             a.steps[i].cumulative_cost == b.steps[i].cumulative_cost &&
             a.steps[i].unsaturated_count == b.steps[i].unsaturated_count;
    }
    if (!same) c.fail("seed " + std::to_string(seed) + ": traces differ");
    if (b.marginal_evaluations > a.marginal_evaluations)
      c.fail("seed " + std::to_string(seed) +
             ": lazy did more marginal evaluations than naive");
    if (b.marginal_evaluations < a.marginal_evaluations) ++strictly_fewer;
  }
  if (strictly_fewer < 45)
    c.fail("lazy was strictly cheaper on only " +
           std::to_string(strictly_fewer) + "/50 instances (need 45)");
  c.note("identical traces on 50/50; lazy strictly cheaper on " +
         std::to_string(strictly_fewer) + "/50");
}

void criterion_9_audits(Criterion& c) {
  const msr::checks::CheckReport report = msr::checks::check_audit(1000);
  if (!report.passed) {
    for (const auto& line : report.lines) c.fail(line);
  } else {
    c.note("four families pass 1000-trial audits; planted stub caught");
  }
}

void criterion_10_dp_complexity(Criterion& c) {
  msr::ScenarioConfig scenario;
  scenario.max_budget = 20;
  scenario.cost_mode = msr::CostMode::kUniformInt;
  scenario.seed = 42;
  const Rational eps(1, 10);

  const Instance half = msr::gen_synthetic(500, 20, 0.02, scenario);
  const Instance full = msr::gen_synthetic(1000, 20, 0.02, scenario);
  const msr::DpResult dp_half = dp_solve(half, round_instance(half, eps));

  const auto start = Clock::now();
  const msr::RoundedInstance rounded = round_instance(full, eps);
  const msr::DpResult dp_full = dp_solve(full, rounded);
  const double full_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  const double ratio = static_cast<double>(dp_full.table_updates) /
                       static_cast<double>(dp_half.table_updates);
  if (ratio < 1.8 || ratio > 2.2)
    c.fail("doubling n scaled table updates by " + std::to_string(ratio));
  if (full_ms > 10000)
    c.fail("n=1000 solve took " + std::to_string(full_ms) + " ms");
  std::ostringstream note;
  note << "updates " << dp_half.table_updates << " -> "
       << dp_full.table_updates << " (x" << ratio << "); n=1000 solve "
       << full_ms << " ms";
  c.note(note.str());
}

void criterion_11_determinism(Criterion& c) {
  msr::BenchConfig config;
  config.n = 60;
  config.m = 15;
  config.density = 0.1;
  config.budget_maxes = {2, 4, 8};
  config.repetitions = 3;
  config.base_seed = 7;
  config.cost_mode = msr::CostMode::kUniformInt;

  const std::vector<msr::RunRecord> records = msr::run_bench(config);
  std::ostringstream a, b;
  msr::write_bench_csv(records, a);
  msr::write_bench_csv(msr::run_bench(config), b);
  if (a.str() != b.str()) {
    c.fail("two identically-seeded sweeps produced different bytes");
    return;
  }
  // Spot check: recorded objectives re-evaluate from the recorded rankings.
  for (size_t i = 0; i < records.size(); i += 7) {
    const msr::RunRecord& record = records[i];
    msr::ScenarioConfig scenario;
    scenario.max_budget = record.max_budget;
    scenario.cost_mode = config.cost_mode;
    scenario.seed = record.seed;
    const Instance instance =
        msr::gen_synthetic(config.n, config.m, config.density, scenario);
    if (msr_objective(instance, record.ranking).total != record.objective)
      c.fail("row " + std::to_string(i) +
             " does not re-evaluate to its recorded objective");
  }
  c.note("3 budgets x 3 reps x 8 algorithms, byte-identical CSV (" +
         std::to_string(a.str().size()) + " bytes)");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;
  auto timed = [&](int id, const std::string& name, auto&& body) {
    Criterion c;
    c.id = id;
    c.name = name;
    const auto start = Clock::now();
    body(c);
    c.wall_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start)
            .count();
    criteria.push_back(std::move(c));
  };

  timed(1, "worked-example exactness", [](Criterion& c) {
    criterion_1_example_exactness(c);
    c.limit_ms(1000);
  });

  {
    Criterion two, four;
    two.id = 2;
    two.name = "greedy 2-approximation";
    four.id = 4;
    four.name = "inverse-budget greedy 3-approximation";
    const auto start = Clock::now();
    criteria_2_and_4_approximation(two, four);
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start)
            .count();
    two.wall_ms = ms;
    four.wall_ms = ms;
    if (ms > 60000) {
      two.fail("shared suite exceeded 60 s");
      four.fail("shared suite exceeded 60 s");
    }
    criteria.push_back(std::move(two));
    criteria.push_back(std::move(four));
  }

  timed(3, "adversarial tightness", [](Criterion& c) {
    criterion_3_tightness(c);
    c.limit_ms(5000);
  });
  timed(5, "table-solver exactness", criterion_5_dp_exactness);
  timed(6, "rounding loss bound", criterion_6_fptas_bound);
  timed(7, "combined knapsack bound", criterion_7_combined_bound);
  timed(8, "lazy evaluation equivalence", criterion_8_lazy_equivalence);
  timed(9, "submodularity audits", criterion_9_audits);
  timed(10, "table-solver complexity", criterion_10_dp_complexity);
  timed(11, "benchmark determinism", criterion_11_determinism);

  std::sort(criteria.begin(), criteria.end(),
            [](const Criterion& a, const Criterion& b) { return a.id < b.id; });

  int failed = 0;
  for (const Criterion& c : criteria) {
    std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name
              << " (" << static_cast<int>(c.wall_ms) << " ms)\n";
    for (const auto& line : c.details) std::cout << "       " << line << "\n";
    failed += c.passed ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed\n"
                            : std::to_string(failed) + " criterion(s) failed\n");
  return failed == 0 ? 0 : 1;
}

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

#include "msr/checks.hpp"

#include <memory>
#include <sstream>

#include "msr/baselines.hpp"
#include "msr/greedy.hpp"
#include "msr/msrl_dp.hpp"
#include "msr/oracle.hpp"
#include "msr/rng.hpp"

namespace msr {
namespace checks {

namespace {

std::shared_ptr<const ValuationOracle> random_oracle(Rng& rng, int n,
                                                     bool integer_values) {
  switch (rng.below(3)) {
    case 0: {  // activation over a random non-empty liked set
      std::vector<ItemId> liked;
      while (liked.empty()) {
        liked.clear();
        for (ItemId v = 0; v < n; ++v) {
          if (rng.below(3) == 0) liked.push_back(v);
        }
      }
      return std::make_shared<Activation>(n, liked);
    }
    case 1: {  // capped modular with small weights
      std::vector<Rational> weights;
      for (ItemId v = 0; v < n; ++v) {
        weights.push_back(integer_values
                              ? Rational(rng.range(0, 3))
                              : Rational(rng.range(0, 6), 2));  // 0, 1/2, ... 3
      }
      std::optional<Rational> cap;
      if (rng.below(2) == 0) cap = Rational(rng.range(1, 4));
      return std::make_shared<CappedModular>(std::move(weights), cap);
    }
    default: {  // coverage over a small element universe
      const int elements = static_cast<int>(rng.range(2, 5));
      std::vector<std::vector<int>> item_elements(n);
      for (ItemId v = 0; v < n; ++v) {
        for (int e = 0; e < elements; ++e) {
          if (rng.below(2) == 0) item_elements[v].push_back(e);
        }
      }
      std::vector<Rational> weights;
      for (int e = 0; e < elements; ++e) {
        weights.push_back(integer_values ? Rational(rng.range(1, 2))
                                         : Rational(rng.range(1, 4), 2));
      }
      return std::make_shared<WeightedCoverage>(n, std::move(item_elements),
                                                std::move(weights));
    }
  }
}

}  // namespace

Instance random_unit_instance(std::uint64_t seed) {
  Rng rng(seed);
  const int n = static_cast<int>(rng.range(3, 7));
  const int m = static_cast<int>(rng.range(1, 5));
  Instance instance;
  for (ItemId v = 0; v < n; ++v) instance.items.push_back({v, Rational(1)});
  for (int i = 0; i < m; ++i) {
    instance.functions.push_back({random_oracle(rng, n, false),
                                  Rational(rng.range(1, n)),
                                  "f" + std::to_string(i)});
  }
  return instance;
}

Instance random_knapsack_instance(std::uint64_t seed, bool integer_values) {
  Rng rng(seed);
  const int n = static_cast<int>(rng.range(3, 6));
  const int m = static_cast<int>(rng.range(1, 4));
  Instance instance;
  for (ItemId v = 0; v < n; ++v)
    instance.items.push_back({v, Rational(rng.range(1, 5))});
  for (int i = 0; i < m; ++i) {
    instance.functions.push_back({random_oracle(rng, n, integer_values),
                                  Rational(rng.range(1, 12)),
                                  "f" + std::to_string(i)});
  }
  return instance;
}

CheckReport check_approx(int instances) {
  CheckReport report;
  report.name = "approx";
  int worst_seed = -1;
  double worst_ratio = 1.0;
  for (int seed = 0; seed < instances; ++seed) {
    const Instance instance = random_unit_instance(seed);
    const BruteForceResult opt = brute_force_msr(instance);

    GreedyOptions uniform;
    uniform.scheme = CoefficientScheme::kUniform;
    const Rational greedy =
        msr_objective(instance, run_greedy(instance, uniform).ranking).total;
    GreedyOptions weighted;
    weighted.scheme = CoefficientScheme::kInverseBudget;
    const Rational wgreedy =
        msr_objective(instance, run_greedy(instance, weighted).ranking).total;

    if (2 * greedy < opt.value)
      report.fail("seed " + std::to_string(seed) + ": greedy " +
                  format_rational(greedy) + " < OPT/2, OPT=" +
                  format_rational(opt.value));
    if (3 * wgreedy < opt.value)
      report.fail("seed " + std::to_string(seed) + ": wgreedy " +
                  format_rational(wgreedy) + " < OPT/3, OPT=" +
                  format_rational(opt.value));
    if (opt.value > 0) {
      const double ratio = to_double(greedy / opt.value);
      if (ratio < worst_ratio) {
        worst_ratio = ratio;
        worst_seed = seed;
      }
    }
  }
  std::ostringstream note;
  note << instances << " unit-cost instances vs brute force; worst greedy/OPT "
       << worst_ratio << " at seed " << worst_seed;
  report.note(note.str());
  return report;
}

CheckReport check_dp(int instances) {
  CheckReport report;
  report.name = "dp";
  for (int seed = 0; seed < instances; ++seed) {
    const Instance instance = random_knapsack_instance(seed, true);
    const RoundedInstance exact = exact_integer_rounding(instance);
    const DpResult dp = dp_solve(instance, exact,
                                 DpOptions{false, /*check_invariants=*/true});
    const BruteForceResult opt = brute_force_gamma(instance);
    if (Rational(dp.rounded_value) != opt.value) {
      report.fail("seed " + std::to_string(seed) + ": table value " +
                  std::to_string(dp.rounded_value) + " != brute-force " +
                  format_rational(opt.value));
      continue;
    }
    if (gamma_value(instance, dp.ranking) != opt.value)
      report.fail("seed " + std::to_string(seed) +
                  ": reconstructed ranking does not achieve the table value");
  }
  report.note(std::to_string(instances) +
              " integer knapsack instances, exact table vs brute force");
  return report;
}

CheckReport check_fixtures() {
  CheckReport report;
  report.name = "fixtures";

  {
    const Instance example = fixture_example1();
    GreedyOptions options;
    const Rational greedy =
        msr_objective(example, run_greedy(example, options).ranking).total;
    if (greedy != Rational(3, 2))
      report.fail("example1 greedy objective " + format_rational(greedy) +
                  " != 3/2");
    const BestOfResult best = best_of(example, Rational(1, 10));
    if (best.objective != 2)
      report.fail("example1 best-of objective " +
                  format_rational(best.objective) + " != 2");
    if (best.ranking != Ranking{0, 2})
      report.fail("example1 best-of ranking is not (0, 2)");
    if (brute_force_msr(example).value != 2)
      report.fail("example1 brute-force optimum != 2");
  }

  {
    const int k = 4;
    const Instance tight = fixture_tight2(k, Rational(1, 100));
    const BruteForceResult opt = brute_force_msr(tight);
    if (opt.value != 2 * k)
      report.fail("tight2(4) brute-force optimum " +
                  format_rational(opt.value) + " != 8");
    GreedyOptions adversarial;
    adversarial.tiebreak = TieBreak::kHighestId;
    const Rational greedy =
        msr_objective(tight, run_greedy(tight, adversarial).ranking).total;
    if (greedy / opt.value > Rational(51, 100))
      report.fail("tight2(4) adversarial greedy ratio above 0.51");
    report.note("tight2(4,1/100): greedy/OPT = " +
                format_rational(greedy / opt.value));
  }

  {
    const Instance bad = fixture_singleton_bad(4, Rational(1, 100));
    const BruteForceResult opt = brute_force_msr(bad);
    const Rational baseline =
        msr_objective(bad, greedy_min(bad)).total;
    report.note("singleton_bad(4,1/100): greedymin/OPT = " +
                format_rational(baseline / opt.value));
    if (3 * baseline >= opt.value)
      report.fail("singleton_bad(4) min-budget baseline did not collapse");
    const BestOfResult best = best_of(bad, Rational(1, 10));
    if (Rational(37, 9) * best.objective < opt.value)
      report.fail("singleton_bad(4) best-of below the combined bound");
  }

  {
    const Instance bad = fixture_second_bad(4, Rational(1, 100));
    const BruteForceResult opt = brute_force_msr(bad);
    const Rational baseline = msr_objective(bad, greedy_min(bad)).total;
    report.note("second_bad(4,1/100): greedymin/OPT = " +
                format_rational(baseline / opt.value));
    // The pairs construction caps the min-budget baseline near 2/(m+1) of
    // the optimum while the combined algorithm stays within its bound.
    if (2 * baseline > opt.value)
      report.fail("second_bad(4) min-budget baseline above OPT/2");
    const BestOfResult best = best_of(bad, Rational(1, 10));
    if (Rational(37, 9) * best.objective < opt.value)
      report.fail("second_bad(4) best-of below the combined bound");
  }

  return report;
}

namespace {

// Negative control: strictly supermodular (marginals grow with the set).
class SupermodularStub : public ValuationOracle {
 public:
  explicit SupermodularStub(int n) : ValuationOracle(n) { cache_max_value(); }
  Rational value(const ItemSet& s) const override {
    long long count = 0;
    for (bool b : s) count += b ? 1 : 0;
    return Rational(count * count);
  }
};

}  // namespace

CheckReport check_audit(int trials) {
  CheckReport report;
  report.name = "audit";

  Rng rng(20260810);
  const int n = 8;

  std::vector<std::pair<std::string, std::shared_ptr<ValuationOracle>>> cases;
  {
    std::vector<Rational> weights;
    for (int v = 0; v < n; ++v) weights.push_back(Rational(rng.range(0, 6), 2));
    cases.emplace_back("capped_modular", std::make_shared<CappedModular>(
                                             weights, Rational(5, 2)));
    cases.emplace_back("modular(uncapped)", std::make_shared<CappedModular>(
                                                weights, std::nullopt));
  }
  cases.emplace_back("activation",
                     std::make_shared<Activation>(n, std::vector<ItemId>{1, 4}));
  {
    std::vector<std::vector<int>> item_elements(n);
    for (int v = 0; v < n; ++v) {
      for (int e = 0; e < 6; ++e) {
        if (rng.below(2) == 0) item_elements[v].push_back(e);
      }
    }
    std::vector<Rational> weights(6, Rational(1, 6));
    cases.emplace_back("weighted_coverage", std::make_shared<WeightedCoverage>(
                                                n, item_elements, weights));
  }
  {
    // Random 5-point rational metric snapshot.
    std::vector<std::vector<Rational>> distances(5, std::vector<Rational>(n));
    for (auto& row : distances) {
      for (auto& d : row) d = Rational(rng.range(0, 40), 4);
    }
    cases.emplace_back("facility_location_gain",
                       std::make_shared<FacilityLocationGain>(distances,
                                                              std::nullopt));
  }

  for (const auto& [name, oracle] : cases) {
    const AuditResult audit = submodularity_audit(*oracle, trials, 7);
    if (!audit.passed)
      report.fail(name + " audit: " + audit.counterexample);
    else
      report.note(name + ": " + std::to_string(trials) + " trials ok");
  }

  const SupermodularStub stub(6);
  const AuditResult stub_audit = submodularity_audit(stub, trials, 7);
  if (stub_audit.passed)
    report.fail("supermodular stub was not caught");
  else
    report.note("supermodular stub caught: " + stub_audit.counterexample);

  return report;
}

}  // namespace checks
}  // namespace msr

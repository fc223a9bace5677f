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

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "msr/rng.hpp"

namespace msr {

namespace {

// One greedy run's mutable state plus the scoring rule.
class GreedyRun {
 public:
  GreedyRun(const Instance& instance, const GreedyOptions& options)
      : instance_(instance),
        options_(options),
        costs_(cost_map(instance)),
        prefix_set_(instance.num_items(), false),
        prefix_cost_(0) {
    const int m = instance.num_functions();
    coefficients_.reserve(m);
    for (int i = 0; i < m; ++i) {
      const Rational& b = instance.functions[i].budget;
      if (options.scheme == CoefficientScheme::kInverseBudget) {
        if (b <= 0)
          throw std::invalid_argument(
              "inverse-budget weighting requires every budget > 0");
        coefficients_.push_back(Rational(1) / b);
      } else {
        coefficients_.push_back(Rational(1));
      }
    }
    // Functions whose budget cannot fit even the cheapest item never score;
    // leave them out of the scoring loop up front.
    Rational min_cost = costs_.empty() ? Rational(0) : costs_[0];
    for (const Rational& c : costs_) min_cost = std::min(min_cost, c);
    for (int i = 0; i < m; ++i) {
      if (instance.functions[i].budget >= min_cost) scoring_functions_.push_back(i);
    }
    if (options.tiebreak == TieBreak::kSeededRandom) {
      priority_.resize(instance.num_items());
      for (int v = 0; v < instance.num_items(); ++v) priority_[v] = v;
      Rng rng(options.seed);
      rng.shuffle(priority_);
    }
  }

  Rational score(ItemId v) {
    ++result_.score_evaluations;
    Rational sum = 0;
    for (int i : scoring_functions_) {
      const BudgetedFunction& f = instance_.functions[i];
      if (!(prefix_cost_ < f.budget)) continue;
      if (prefix_cost_ + costs_[v] > f.budget) continue;
      ++result_.marginal_evaluations;
      sum += coefficients_[i] * f.oracle->marginal(v, prefix_set_);
    }
    if (sum == 0) return sum;
    return sum / costs_[v];
  }

  // Strict preference among equal scores; total order over items.
  bool prefers(ItemId a, ItemId b) const {
    switch (options_.tiebreak) {
      case TieBreak::kLowestId:
        return a < b;
      case TieBreak::kHighestId:
        return a > b;
      case TieBreak::kSeededRandom:
        return priority_[a] < priority_[b];
    }
    return a < b;
  }

  int unsaturated_count() const {
    int count = 0;
    for (const BudgetedFunction& f : instance_.functions) {
      if (prefix_cost_ < f.budget) ++count;
    }
    return count;
  }

  void append(ItemId v, const Rational& score_value, int unsaturated) {
    prefix_set_[v] = true;
    prefix_cost_ += costs_[v];
    result_.ranking.push_back(v);
    GreedyStep step;
    step.iteration = static_cast<int>(result_.ranking.size());
    step.item = v;
    step.score = score_value;
    step.cumulative_cost = prefix_cost_;
    step.unsaturated_count = unsaturated;
    result_.steps.push_back(std::move(step));
  }

  void finish(GreedyStop reason) {
    result_.stop_reason = reason;
    result_.budgets_exhausted = unsaturated_count() == 0;
  }

  const Instance& instance_;
  GreedyOptions options_;
  std::vector<Rational> costs_;
  std::vector<Rational> coefficients_;
  std::vector<int> scoring_functions_;
  std::vector<int> priority_;
  ItemSet prefix_set_;
  Rational prefix_cost_;
  GreedyResult result_;
};

GreedyResult run_naive(GreedyRun& run) {
  const int n = run.instance_.num_items();
  std::vector<bool> used(n, false);
  for (int iteration = 0; iteration < n; ++iteration) {
    const int unsaturated = run.unsaturated_count();
    bool have_best = false;
    ItemId best_item = -1;
    Rational best_score = 0;
    for (ItemId v = 0; v < n; ++v) {
      if (used[v]) continue;
      Rational s = run.score(v);
      if (!have_best || s > best_score ||
          (s == best_score && run.prefers(v, best_item))) {
        have_best = true;
        best_item = v;
        best_score = s;
      }
    }
    if (!have_best) break;
    if (best_score == 0) {
      run.finish(GreedyStop::kZeroScore);
      return std::move(run.result_);
    }
    used[best_item] = true;
    run.append(best_item, best_score, unsaturated);
  }
  run.finish(GreedyStop::kItemsExhausted);
  return std::move(run.result_);
}

struct HeapEntry {
  Rational score;
  int stamp = 0;  // iteration the score was computed for
  ItemId item = 0;
};

GreedyResult run_lazy(GreedyRun& run) {
  const int n = run.instance_.num_items();
  // Max-heap on (score, tie-break preference).
  auto worse = [&run](const HeapEntry& a, const HeapEntry& b) {
    if (a.score != b.score) return a.score < b.score;
    return run.prefers(b.item, a.item);
  };
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(worse)> heap(
      worse);
  for (ItemId v = 0; v < n; ++v) heap.push({run.score(v), 1, v});

  for (int iteration = 1; !heap.empty(); ++iteration) {
    const int unsaturated = run.unsaturated_count();
    while (true) {
      HeapEntry top = heap.top();
      heap.pop();
      if (top.stamp != iteration) {
        top.score = run.score(top.item);
        top.stamp = iteration;
        heap.push(top);
        continue;
      }
      // Fresh head: every other entry's cached score is an upper bound that
      // is lexicographically below this one, so this is the exact argmax.
      if (top.score == 0) {
        run.finish(GreedyStop::kZeroScore);
        return std::move(run.result_);
      }
      run.append(top.item, top.score, unsaturated);
      break;
    }
  }
  run.finish(GreedyStop::kItemsExhausted);
  return std::move(run.result_);
}

}  // namespace

Rational greedy_score(const Instance& instance, const Ranking& prefix,
                      ItemId v, CoefficientScheme scheme) {
  require_valid_ranking(instance, prefix);
  if (v < 0 || v >= instance.num_items())
    throw std::invalid_argument("unknown candidate item id " +
                                std::to_string(v));
  GreedyOptions options;
  options.scheme = scheme;
  GreedyRun run(instance, options);
  for (ItemId u : prefix) {
    if (u == v) throw std::invalid_argument("candidate already in prefix");
    run.prefix_set_[u] = true;
    run.prefix_cost_ += run.costs_[u];
  }
  return run.score(v);
}

GreedyResult run_greedy(const Instance& instance,
                        const GreedyOptions& options) {
  GreedyRun run(instance, options);
  return options.lazy ? run_lazy(run) : run_naive(run);
}

std::string trace_to_csv(const GreedyResult& result) {
  std::ostringstream os;
  os << "iteration,item,score,cost,unsaturated\n";
  for (const GreedyStep& step : result.steps) {
    os << step.iteration << "," << step.item << ","
       << format_rational(step.score) << ","
       << format_rational(step.cumulative_cost) << ","
       << step.unsaturated_count << "\n";
  }
  return os.str();
}

}  // namespace msr

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

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace msr {

namespace {

Rational singleton_value(const Instance& instance, int function, ItemId v) {
  ItemSet s(instance.num_items(), false);
  s[v] = true;
  return instance.functions[function].oracle->value(s);
}

bool is_large(const Instance& instance, int function, ItemId v) {
  return 2 * instance.cost(v) > instance.functions[function].budget;
}

}  // namespace

std::vector<int> large_functions(const Instance& instance, ItemId v,
                                 const Rational& prefix_cost) {
  if (v < 0 || v >= instance.num_items())
    throw std::invalid_argument("unknown item id " + std::to_string(v));
  std::vector<int> out;
  for (int i = 0; i < instance.num_functions(); ++i) {
    if (is_large(instance, i, v) &&
        prefix_cost + instance.cost(v) <= instance.functions[i].budget) {
      out.push_back(i);
    }
  }
  return out;
}

Rational gamma_value(const Instance& instance, const Ranking& ranking) {
  require_valid_ranking(instance, ranking);
  Rational total = 0;
  Rational prefix_cost = 0;
  for (ItemId v : ranking) {
    for (int i : large_functions(instance, v, prefix_cost)) {
      total += singleton_value(instance, i, v);
    }
    prefix_cost += instance.cost(v);
  }
  return total;
}

std::vector<ItemId> sort_for_dp(const Instance& instance) {
  std::vector<ItemId> order(instance.num_items());
  for (int v = 0; v < instance.num_items(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
    return instance.cost(a) < instance.cost(b);
  });
  return order;
}

RoundedInstance round_instance(const Instance& instance, const Rational& eps) {
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("rounding needs 0 < eps < 1");
  const int n = instance.num_items();
  const int m = instance.num_functions();

  RoundedInstance out;
  out.epsilon = eps;
  out.values.assign(m, std::vector<std::int64_t>(n, 0));

  Rational max_singleton = 0;
  for (int i = 0; i < m; ++i) {
    for (ItemId v = 0; v < n; ++v) {
      if (!is_large(instance, i, v)) continue;
      max_singleton = std::max(max_singleton, singleton_value(instance, i, v));
    }
  }
  out.max_large_singleton = max_singleton;
  if (max_singleton == 0) {
    out.no_large_items = true;
    return out;
  }

  out.rounding_unit = max_singleton * eps / m;
  out.value_cap =
      rational_ceil(Rational(m) * m / eps).convert_to<std::int64_t>();
  for (int i = 0; i < m; ++i) {
    for (ItemId v = 0; v < n; ++v) {
      if (!is_large(instance, i, v)) continue;
      out.values[i][v] =
          rational_floor(singleton_value(instance, i, v) / out.rounding_unit)
              .convert_to<std::int64_t>();
    }
  }
  return out;
}

RoundedInstance exact_integer_rounding(const Instance& instance) {
  const int n = instance.num_items();
  const int m = instance.num_functions();

  RoundedInstance out;
  out.values.assign(m, std::vector<std::int64_t>(n, 0));
  bool any_large = false;
  std::int64_t cap = 0;
  for (int i = 0; i < m; ++i) {
    std::int64_t best = 0;
    for (ItemId v = 0; v < n; ++v) {
      if (!is_large(instance, i, v)) continue;
      const Rational value = singleton_value(instance, i, v);
      if (value > 0) any_large = true;
      if (denominator(value) != 1)
        throw std::invalid_argument(
            "exact rounding requires integer singleton values");
      out.values[i][v] = numerator(value).convert_to<std::int64_t>();
      out.max_large_singleton = std::max(out.max_large_singleton, value);
      best = std::max(best, out.values[i][v]);
    }
    cap += best;
  }
  out.value_cap = cap;
  out.no_large_items = !any_large;
  return out;
}

std::int64_t gamma_rounded(const Instance& instance,
                           const RoundedInstance& rounded,
                           const Ranking& ranking) {
  require_valid_ranking(instance, ranking);
  std::int64_t total = 0;
  Rational prefix_cost = 0;
  for (ItemId v : ranking) {
    for (int i : large_functions(instance, v, prefix_cost)) {
      total += rounded.values[i][v];
    }
    prefix_cost += instance.cost(v);
  }
  return total;
}

namespace {

// The table works in integers: all costs and budgets are brought onto the
// common denominator of the whole instance, so entry comparisons are plain
// big-integer compares.
struct ScaledCosts {
  std::vector<BigInt> item_cost;    // by item id
  std::vector<BigInt> budget;       // by function index
  BigInt denom = 1;

  Rational to_rational(const BigInt& scaled) const {
    return Rational(scaled, denom);
  }
};

ScaledCosts scale_costs(const Instance& instance) {
  ScaledCosts out;
  for (const Item& item : instance.items)
    out.denom = boost::multiprecision::lcm(out.denom, denominator(item.cost));
  for (const BudgetedFunction& f : instance.functions)
    out.denom = boost::multiprecision::lcm(out.denom, denominator(f.budget));
  out.item_cost.reserve(instance.num_items());
  for (int v = 0; v < instance.num_items(); ++v) {
    const Rational& c = instance.cost(v);
    out.item_cost.push_back(numerator(c) * (out.denom / denominator(c)));
  }
  out.budget.reserve(instance.num_functions());
  for (const BudgetedFunction& f : instance.functions) {
    out.budget.push_back(numerator(f.budget) *
                         (out.denom / denominator(f.budget)));
  }
  return out;
}

struct Column {
  std::vector<BigInt> cost;
  std::vector<bool> reachable;

  explicit Column(std::int64_t grid) : cost(grid + 1), reachable(grid + 1) {}
};

struct ParentRecord {
  std::int64_t val;
  std::int64_t pred;
  enum Kind : std::uint8_t { kTake, kRelax } kind;
};

// Sum of rounded values of functions taking item v as a large item on top of
// a prefix of scaled cost `thr - scaled_cost(v)`; eligibility is b_i >= thr.
// As thr only decreases across calls, a cursor over the budget-descending
// function order accumulates newly eligible functions in O(m) total.
class EligibleSum {
 public:
  EligibleSum(const Instance& instance, const ScaledCosts& scaled,
              const RoundedInstance& rounded,
              const std::vector<int>& budget_desc, ItemId item)
      : instance_(instance),
        scaled_(scaled),
        rounded_(rounded),
        budget_desc_(budget_desc),
        item_(item) {}

  std::int64_t at_threshold(const BigInt& threshold) {
    while (cursor_ < budget_desc_.size()) {
      const int i = budget_desc_[cursor_];
      if (scaled_.budget[i] < threshold) break;
      if (is_large(instance_, i, item_)) sum_ += rounded_.values[i][item_];
      ++cursor_;
    }
    return sum_;
  }

 private:
  const Instance& instance_;
  const ScaledCosts& scaled_;
  const RoundedInstance& rounded_;
  const std::vector<int>& budget_desc_;
  ItemId item_;
  std::size_t cursor_ = 0;
  std::int64_t sum_ = 0;
};

void check_column_monotone(const Column& col, const Column* prev) {
  for (std::size_t val = 0; val + 1 < col.cost.size(); ++val) {
    if (!col.reachable[val + 1]) continue;
    if (!col.reachable[val] || col.cost[val] > col.cost[val + 1])
      throw std::logic_error("dp table not monotone in value");
  }
  if (prev != nullptr) {
    for (std::size_t val = 0; val < col.cost.size(); ++val) {
      if (!prev->reachable[val]) continue;
      if (!col.reachable[val] || col.cost[val] > prev->cost[val])
        throw std::logic_error("dp table not monotone across columns");
    }
  }
}

}  // namespace

DpResult dp_solve(const Instance& instance, const RoundedInstance& rounded,
                  const DpOptions& options) {
  DpResult result;
  if (rounded.no_large_items || instance.num_items() == 0) return result;

  const std::vector<ItemId> order = sort_for_dp(instance);
  const ScaledCosts scaled = scale_costs(instance);
  const int n = instance.num_items();
  const std::int64_t grid = rounded.value_cap;

  std::vector<int> budget_desc(instance.num_functions());
  for (std::size_t i = 0; i < budget_desc.size(); ++i)
    budget_desc[i] = static_cast<int>(i);
  std::stable_sort(budget_desc.begin(), budget_desc.end(), [&](int a, int b) {
    return scaled.budget[a] > scaled.budget[b];
  });

  // parents[j] holds the non-skip provenance records of column j, appended in
  // descending val order. A val without a record copies column j-1.
  std::vector<std::vector<ParentRecord>> parents(n);

  Column prev(grid);
  Column cur(grid);
  std::vector<BigInt> take_cost(grid + 1);
  std::vector<bool> take_set(grid + 1);
  std::vector<std::int64_t> take_pred(grid + 1);

  // First column: the cheapest item alone.
  {
    const ItemId v0 = order[0];
    EligibleSum gain(instance, scaled, rounded, budget_desc, v0);
    const std::int64_t reach = std::min(gain.at_threshold(scaled.item_cost[v0]), grid);
    for (std::int64_t val = 0; val <= grid; ++val) {
      ++result.table_updates;
      if (val == 0) {
        prev.cost[val] = 0;
        prev.reachable[val] = true;
      } else if (val <= reach) {
        prev.cost[val] = scaled.item_cost[v0];
        prev.reachable[val] = true;
        parents[0].push_back({val, 0, ParentRecord::kTake});
      } else {
        prev.reachable[val] = false;
      }
    }
    // Records were appended in ascending val order here; keep them descending
    // like every other column so reconstruction can binary-search uniformly.
    std::reverse(parents[0].begin(), parents[0].end());
  }

  auto snapshot = [&](const Column& col) {
    std::vector<std::optional<Rational>> out(grid + 1);
    for (std::int64_t val = 0; val <= grid; ++val) {
      if (col.reachable[val]) out[val] = scaled.to_rational(col.cost[val]);
    }
    return out;
  };
  DpTableDump dump;
  if (options.check_invariants) check_column_monotone(prev, nullptr);
  if (options.keep_table) {
    dump.item_order = order;
    dump.cost.resize(n);
    dump.cost[0] = snapshot(prev);
  }

  for (int j = 1; j < n; ++j) {
    const ItemId vj = order[j];
    const BigInt& item_cost = scaled.item_cost[vj];
    EligibleSum gain(instance, scaled, rounded, budget_desc, vj);

    // Pass one, val descending: extend reachable prefixes by item j. The
    // previous column's cost is non-increasing as val descends, so the
    // eligibility threshold cost + cost(v_j) is too.
    std::fill(take_set.begin(), take_set.end(), false);
    for (std::int64_t val = grid; val >= 0; --val) {
      ++result.table_updates;
      if (!prev.reachable[val]) continue;
      const std::int64_t g = gain.at_threshold(prev.cost[val] + item_cost);
      const std::int64_t target = std::min(val + g, grid);
      BigInt cand = prev.cost[val] + item_cost;
      if (!take_set[target] || cand < take_cost[target]) {
        take_set[target] = true;
        take_cost[target] = std::move(cand);
        take_pred[target] = val;
      }
    }

    // Pass two, val descending: merge skip (previous column), take, and the
    // running minimum from higher values.
    BigInt relax;
    bool relax_set = false;
    for (std::int64_t val = grid; val >= 0; --val) {
      ++result.table_updates;
      bool reachable = prev.reachable[val];
      BigInt best = reachable ? prev.cost[val] : BigInt(0);
      ParentRecord::Kind kind = ParentRecord::kTake;
      bool is_skip = reachable;
      std::int64_t pred = 0;
      if (take_set[val] && (!reachable || take_cost[val] < best)) {
        best = take_cost[val];
        reachable = true;
        is_skip = false;
        kind = ParentRecord::kTake;
        pred = take_pred[val];
      }
      if (relax_set && (!reachable || relax < best)) {
        best = relax;
        reachable = true;
        is_skip = false;
        kind = ParentRecord::kRelax;
        pred = val + 1;
      }
      cur.reachable[val] = reachable;
      if (reachable) {
        cur.cost[val] = best;
        if (!is_skip) parents[j].push_back({val, pred, kind});
        if (!relax_set || cur.cost[val] < relax) {
          relax = cur.cost[val];
          relax_set = true;
        }
      }
    }

    if (options.check_invariants) check_column_monotone(cur, &prev);
    if (options.keep_table) dump.cost[j] = snapshot(cur);
    std::swap(prev, cur);
  }

  std::int64_t best_val = 0;
  for (std::int64_t val = grid; val >= 0; --val) {
    if (prev.reachable[val]) {
      best_val = val;
      break;
    }
  }
  result.rounded_value = best_val;

  // Walk the provenance log backwards: no record means the value was carried
  // over from the previous column, a relax record points one value up in the
  // same column, a take record consumes item j.
  Ranking taken;
  std::int64_t val = best_val;
  int j = n - 1;
  while (val > 0) {
    if (j < 0) throw std::logic_error("dp reconstruction walked past column 0");
    const ParentRecord* rec = nullptr;
    // Records are stored in descending val order.
    const auto& col = parents[j];
    auto it = std::lower_bound(
        col.begin(), col.end(), val,
        [](const ParentRecord& r, std::int64_t v) { return r.val > v; });
    if (it != col.end() && it->val == val) rec = &*it;
    if (rec == nullptr) {
      --j;
    } else if (rec->kind == ParentRecord::kRelax) {
      val = rec->pred;
    } else {
      taken.push_back(order[j]);
      val = rec->pred;
      --j;
    }
  }
  std::reverse(taken.begin(), taken.end());
  result.ranking = std::move(taken);
  if (options.keep_table) result.table = std::move(dump);
  return result;
}

std::string dp_table_csv(const DpTableDump& dump) {
  std::ostringstream os;
  os << "val,j,cost\n";
  for (std::size_t j = 0; j < dump.cost.size(); ++j) {
    for (std::size_t val = 0; val < dump.cost[j].size(); ++val) {
      if (!dump.cost[j][val]) continue;
      os << val << "," << j + 1 << "," << format_rational(*dump.cost[j][val])
         << "\n";
    }
  }
  return os.str();
}

BestOfResult best_of(const Instance& instance, const Rational& eps) {
  BestOfResult out;
  GreedyOptions greedy_options;
  greedy_options.scheme = CoefficientScheme::kUniform;
  GreedyResult greedy = run_greedy(instance, greedy_options);
  out.greedy_ranking = greedy.ranking;
  out.greedy_objective = msr_objective(instance, greedy.ranking).total;

  const RoundedInstance rounded = round_instance(instance, eps);
  if (!rounded.no_large_items) {
    DpResult dp = dp_solve(instance, rounded);
    out.dp_ranking = dp.ranking;
    out.dp_objective = msr_objective(instance, dp.ranking).total;
  }

  if (out.dp_objective > out.greedy_objective) {
    out.dp_used = true;
    out.ranking = out.dp_ranking;
    out.objective = out.dp_objective;
  } else {
    out.ranking = out.greedy_ranking;
    out.objective = out.greedy_objective;
  }
  return out;
}

}  // namespace msr

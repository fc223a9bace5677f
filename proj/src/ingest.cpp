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

#include "msr/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "msr/instance_io.hpp"
#include "msr/rng.hpp"

namespace msr {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) {
    // Trim surrounding spaces.
    size_t a = field.find_first_not_of(" \t\r");
    size_t b = field.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string token;
  while (is >> token) out.push_back(token);
  return out;
}

// Draw order: item costs first (in id order), then function budgets (in
// function order). Loaders rely on this being stable.
void assign_costs(Instance& instance, const ScenarioConfig& config, Rng& rng) {
  for (Item& item : instance.items) {
    switch (config.cost_mode) {
      case CostMode::kUnit:
        item.cost = 1;
        break;
      case CostMode::kUniformInt:
        item.cost = Rational(rng.range(1, 10));
        break;
      case CostMode::kDocumentLength:
        break;  // set by the loader before this call
    }
  }
}

void assign_budgets(Instance& instance, const ScenarioConfig& config,
                    Rng& rng) {
  if (config.max_budget < 1)
    throw std::invalid_argument("max_budget must be >= 1");
  Rational mean_cost = 0;
  if (config.budget_mode == BudgetMode::kScaledByMeanCost) {
    for (const Item& item : instance.items) mean_cost += item.cost;
    mean_cost /= instance.num_items();
  }
  for (BudgetedFunction& f : instance.functions) {
    const Rational draw(rng.range(1, config.max_budget));
    f.budget = config.budget_mode == BudgetMode::kScaledByMeanCost
                   ? draw * mean_cost
                   : draw;
  }
}

}  // namespace

Instance load_activation_instance(const std::string& triples_path,
                                  int like_threshold,
                                  const ScenarioConfig& config) {
  std::ifstream in(triples_path);
  if (!in) throw DataError("cannot open triples file: " + triples_path);

  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw DataError("empty triples file");
  ++line_no;
  {
    const auto header = split_csv(line);
    if (header != std::vector<std::string>{"user", "item", "count"})
      throw DataError("triples header must be 'user,item,count'");
  }

  struct Row {
    std::string user, item;
    long long count;
  };
  std::vector<Row> rows;
  std::set<std::string> item_keys, user_keys;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty())
      throw DataError("malformed triple at line " + std::to_string(line_no));
    long long count = 0;
    try {
      size_t consumed = 0;
      count = std::stoll(fields[2], &consumed);
      if (consumed != fields[2].size() || count < 0) throw std::exception();
    } catch (...) {
      throw DataError("bad count at line " + std::to_string(line_no));
    }
    rows.push_back({fields[0], fields[1], count});
    item_keys.insert(fields[1]);
    user_keys.insert(fields[0]);
  }
  if (rows.empty()) throw DataError("triples file has no data rows");

  // Dense ids in sorted key order, independent of row order.
  std::map<std::string, ItemId> item_id;
  for (const std::string& key : item_keys)
    item_id.emplace(key, static_cast<ItemId>(item_id.size()));
  std::map<std::string, int> user_index;
  for (const std::string& key : user_keys)
    user_index.emplace(key, static_cast<int>(user_index.size()));

  std::vector<std::set<ItemId>> liked(user_keys.size());
  for (const Row& row : rows) {
    if (row.count > like_threshold)
      liked[user_index.at(row.user)].insert(item_id.at(row.item));
  }

  Instance instance;
  for (ItemId v = 0; v < static_cast<ItemId>(item_keys.size()); ++v)
    instance.items.push_back({v, Rational(1)});
  const int n = instance.num_items();
  for (const auto& [user, index] : user_index) {
    if (liked[index].empty()) {
      std::cerr << "note: dropping user '" << user
                << "' with empty liked set\n";
      continue;
    }
    std::vector<ItemId> ids(liked[index].begin(), liked[index].end());
    instance.functions.push_back(
        {std::make_shared<Activation>(n, ids), Rational(1), user});
  }

  Rng rng(config.seed);
  assign_costs(instance, config, rng);
  assign_budgets(instance, config, rng);
  return instance;
}

Instance load_coverage_instance(const std::string& topics_path,
                                const std::string& documents_path,
                                const ScenarioConfig& config) {
  std::ifstream topics_in(topics_path);
  if (!topics_in) throw DataError("cannot open topics file: " + topics_path);
  std::ifstream docs_in(documents_path);
  if (!docs_in)
    throw DataError("cannot open documents file: " + documents_path);

  std::vector<std::vector<std::string>> topics;
  std::string line;
  int line_no = 0;
  while (std::getline(topics_in, line)) {
    ++line_no;
    auto keywords = split_tokens(line);
    if (keywords.empty())
      throw DataError("topic with zero keywords at line " +
                      std::to_string(line_no));
    std::sort(keywords.begin(), keywords.end());
    keywords.erase(std::unique(keywords.begin(), keywords.end()),
                   keywords.end());
    topics.push_back(std::move(keywords));
  }
  if (topics.empty()) throw DataError("topics file is empty");

  std::vector<std::set<std::string>> documents;
  std::vector<int> lengths;
  while (std::getline(docs_in, line)) {
    const auto tokens = split_tokens(line);
    documents.emplace_back(tokens.begin(), tokens.end());
    lengths.push_back(static_cast<int>(tokens.size()));
  }
  if (documents.empty()) throw DataError("documents file is empty");

  Instance instance;
  for (ItemId v = 0; v < static_cast<ItemId>(documents.size()); ++v) {
    Rational cost = 1;
    if (config.cost_mode == CostMode::kDocumentLength)
      cost = Rational(std::max(1, lengths[v]));
    instance.items.push_back({v, cost});
  }

  const int n = instance.num_items();
  for (size_t t = 0; t < topics.size(); ++t) {
    const auto& keywords = topics[t];
    std::vector<std::vector<int>> item_elements(n);
    for (int v = 0; v < n; ++v) {
      for (size_t e = 0; e < keywords.size(); ++e) {
        if (documents[v].count(keywords[e]))
          item_elements[v].push_back(static_cast<int>(e));
      }
    }
    // Coverage *rate*: each keyword carries weight 1/|keywords|.
    std::vector<Rational> weights(keywords.size(),
                                  Rational(1, keywords.size()));
    instance.functions.push_back(
        {std::make_shared<WeightedCoverage>(n, std::move(item_elements),
                                            std::move(weights)),
         Rational(1), "topic" + std::to_string(t)});
  }

  Rng rng(config.seed);
  if (config.cost_mode != CostMode::kDocumentLength)
    assign_costs(instance, config, rng);
  assign_budgets(instance, config, rng);
  return instance;
}

Instance load_facility_instance(
    const std::string& points_path,
    const std::vector<std::vector<int>>& feature_subsets,
    const ScenarioConfig& config) {
  std::ifstream in(points_path);
  if (!in) throw DataError("cannot open points file: " + points_path);

  std::vector<std::vector<double>> points;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> row;
    for (const std::string& field : split_csv(line)) {
      try {
        size_t consumed = 0;
        row.push_back(std::stod(field, &consumed));
        if (consumed != field.size()) throw std::exception();
      } catch (...) {
        throw DataError("bad float at line " + std::to_string(line_no));
      }
    }
    if (!points.empty() && row.size() != points.front().size())
      throw DataError("inconsistent column count at line " +
                      std::to_string(line_no));
    points.push_back(std::move(row));
  }
  if (points.empty()) throw DataError("points file is empty");
  const int n = static_cast<int>(points.size());
  const int dims = static_cast<int>(points.front().size());

  Instance instance;
  for (ItemId v = 0; v < n; ++v) instance.items.push_back({v, Rational(1)});

  int model = 0;
  for (const std::vector<int>& features : feature_subsets) {
    for (int f : features) {
      if (f < 0 || f >= dims)
        throw DataError("feature index " + std::to_string(f) +
                        " out of range for " + std::to_string(dims) +
                        " columns");
    }
    // Distances enter the oracle as exact images of the computed doubles;
    // everything downstream is exact arithmetic.
    std::vector<std::vector<Rational>> distances(
        n, std::vector<Rational>(n, Rational(0)));
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double sum = 0;
        for (int f : features) {
          const double d = points[p][f] - points[q][f];
          sum += d * d;
        }
        const Rational dist{std::sqrt(sum)};
        distances[p][q] = dist;
        distances[q][p] = dist;
      }
    }
    instance.functions.push_back(
        {std::make_shared<FacilityLocationGain>(std::move(distances),
                                                std::nullopt),
         Rational(1), "model" + std::to_string(model)});
    ++model;
  }

  Rng rng(config.seed);
  assign_costs(instance, config, rng);
  assign_budgets(instance, config, rng);
  return instance;
}

Instance gen_synthetic(int n, int m, double density,
                       const ScenarioConfig& config) {
  if (n < 1 || m < 0) throw std::invalid_argument("need n >= 1 and m >= 0");
  if (!(density > 0.0) || density > 1.0)
    throw std::invalid_argument("density must be in (0, 1]");

  Rng rng(config.seed);
  Instance instance;
  for (ItemId v = 0; v < n; ++v) instance.items.push_back({v, Rational(1)});

  // Liked sets first, then costs, then budgets (documented draw order).
  int dropped = 0;
  for (int u = 0; u < m; ++u) {
    std::vector<ItemId> liked;
    for (ItemId v = 0; v < n; ++v) {
      if (rng.bernoulli(density)) liked.push_back(v);
    }
    if (liked.empty()) {
      ++dropped;
      continue;
    }
    instance.functions.push_back({std::make_shared<Activation>(n, liked),
                                  Rational(1), "u" + std::to_string(u)});
  }
  if (dropped > 0) {
    std::cerr << "note: dropped " << dropped
              << " synthetic user(s) with empty liked set\n";
  }
  assign_costs(instance, config, rng);
  assign_budgets(instance, config, rng);
  return instance;
}

}  // namespace msr

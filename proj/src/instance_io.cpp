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

#include "msr/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <memory>

namespace msr {

using nlohmann::json;

Rational rational_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Rational(BigInt(j.get<std::uint64_t>()));
    if (j.is_number_float()) return Rational(j.get<double>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  throw DataError("expected a number or rational string, got " + j.dump());
}

json rational_to_json(const Rational& x) {
  if (denominator(x) == 1 &&
      numerator(x) >= std::numeric_limits<std::int64_t>::min() &&
      numerator(x) <= std::numeric_limits<std::int64_t>::max()) {
    return json(numerator(x).convert_to<std::int64_t>());
  }
  return json(format_rational(x));
}

namespace {

std::vector<Rational> rational_array(const json& j, const char* what) {
  if (!j.is_array()) throw DataError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(rational_from_json(e));
  return out;
}

json rational_array_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(rational_to_json(v));
  return out;
}

const json& require_field(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end())
    throw DataError("missing field '" + std::string(field) + "' in " + j.dump());
  return *it;
}

std::shared_ptr<const ValuationOracle> oracle_from_json(const std::string& type,
                                                        const json& params,
                                                        int num_items) {
  if (type == "activation") {
    std::vector<ItemId> liked =
        require_field(params, "liked").get<std::vector<ItemId>>();
    return std::make_shared<Activation>(num_items, liked);
  }
  if (type == "capped_modular") {
    std::vector<Rational> weights =
        rational_array(require_field(params, "weights"), "weights");
    if (static_cast<int>(weights.size()) != num_items)
      throw DataError("weights must have one entry per item");
    std::optional<Rational> cap;
    if (params.contains("cap") && !params["cap"].is_null())
      cap = rational_from_json(params["cap"]);
    return std::make_shared<CappedModular>(std::move(weights), std::move(cap));
  }
  if (type == "weighted_coverage") {
    auto item_elements = require_field(params, "item_elements")
                             .get<std::vector<std::vector<int>>>();
    std::vector<Rational> weights = rational_array(
        require_field(params, "element_weights"), "element_weights");
    return std::make_shared<WeightedCoverage>(num_items,
                                              std::move(item_elements),
                                              std::move(weights));
  }
  if (type == "facility_location_gain") {
    const json& rows = require_field(params, "distances");
    if (!rows.is_array()) throw DataError("distances must be an array of rows");
    std::vector<std::vector<Rational>> distances;
    for (const json& row : rows)
      distances.push_back(rational_array(row, "distance row"));
    std::optional<std::vector<Rational>> radius;
    if (params.contains("baseline_radius") &&
        !params["baseline_radius"].is_null()) {
      radius = rational_array(params["baseline_radius"], "baseline_radius");
    }
    return std::make_shared<FacilityLocationGain>(std::move(distances),
                                                  std::move(radius));
  }
  throw DataError("unknown function type '" + type + "'");
}

json oracle_to_json(const ValuationOracle& oracle) {
  json out;
  if (const auto* a = dynamic_cast<const Activation*>(&oracle)) {
    out["type"] = "activation";
    out["params"] = {{"liked", a->liked_items()}};
    return out;
  }
  if (const auto* c = dynamic_cast<const CappedModular*>(&oracle)) {
    out["type"] = "capped_modular";
    out["params"] = {{"weights", rational_array_to_json(c->weights())}};
    if (c->cap()) out["params"]["cap"] = rational_to_json(*c->cap());
    return out;
  }
  if (const auto* w = dynamic_cast<const WeightedCoverage*>(&oracle)) {
    out["type"] = "weighted_coverage";
    out["params"] = {
        {"item_elements", w->item_elements()},
        {"element_weights", rational_array_to_json(w->element_weights())}};
    return out;
  }
  if (const auto* f = dynamic_cast<const FacilityLocationGain*>(&oracle)) {
    out["type"] = "facility_location_gain";
    json rows = json::array();
    for (const auto& row : f->distances())
      rows.push_back(rational_array_to_json(row));
    out["params"] = {
        {"distances", std::move(rows)},
        {"baseline_radius", rational_array_to_json(f->baseline_radius())}};
    return out;
  }
  throw DataError("oracle type is not serializable");
}

}  // namespace

json instance_to_json(const Instance& instance) {
  json items = json::array();
  for (const Item& item : instance.items) {
    items.push_back({{"id", item.id}, {"cost", rational_to_json(item.cost)}});
  }
  json functions = json::array();
  for (const BudgetedFunction& f : instance.functions) {
    json entry = oracle_to_json(*f.oracle);
    entry["budget"] = rational_to_json(f.budget);
    if (!f.label.empty()) entry["label"] = f.label;
    functions.push_back(std::move(entry));
  }
  return json{{"items", std::move(items)}, {"functions", std::move(functions)}};
}

Instance instance_from_json(const json& j) {
  try {
    Instance instance;
    const json& items = require_field(j, "items");
    if (!items.is_array() || items.empty())
      throw DataError("items must be a non-empty array");
    for (const json& entry : items) {
      Item item;
      item.id = require_field(entry, "id").get<int>();
      item.cost = rational_from_json(require_field(entry, "cost"));
      if (item.cost <= 0)
        throw DataError("item " + std::to_string(item.id) +
                        " has non-positive cost");
      instance.items.push_back(std::move(item));
    }
    std::sort(instance.items.begin(), instance.items.end(),
              [](const Item& a, const Item& b) { return a.id < b.id; });
    for (int v = 0; v < instance.num_items(); ++v) {
      if (instance.items[v].id != v)
        throw DataError("item ids must be distinct and contiguous from 0");
    }

    const json& functions = require_field(j, "functions");
    if (!functions.is_array()) throw DataError("functions must be an array");
    int index = 0;
    for (const json& entry : functions) {
      BudgetedFunction f;
      f.budget = rational_from_json(require_field(entry, "budget"));
      if (f.budget < 0) throw DataError("budgets must be non-negative");
      f.label = entry.value("label", "f" + std::to_string(index));
      f.oracle =
          oracle_from_json(require_field(entry, "type").get<std::string>(),
                           require_field(entry, "params"),
                           instance.num_items());
      instance.functions.push_back(std::move(f));
      ++index;
    }
    return instance;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed instance json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  } catch (const std::out_of_range& e) {
    throw DataError(e.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError("cannot parse '" + path + "': " + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write instance file: " + path);
  out << instance_to_json(instance).dump(2) << "\n";
}

}  // namespace msr

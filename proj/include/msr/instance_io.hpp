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

// Lossless JSON schema for instances:
//
// {
//   "items": [{"id": 0, "cost": 1}, {"id": 1, "cost": "5/2"}, ...],
//   "functions": [
//     {"type": "activation", "budget": 3, "label": "u1",
//      "params": {"liked": [0, 2]}},
//     {"type": "capped_modular", "budget": "9/2",
//      "params": {"weights": [1, "3/2", 0], "cap": 1}},        // cap optional
//     {"type": "weighted_coverage", "budget": 4,
//      "params": {"element_weights": ["1/2", "1/2"],
//                 "item_elements": [[0, 1], [1]]}},
//     {"type": "facility_location_gain", "budget": 5,
//      "params": {"distances": [[0, "3/2"], ["3/2", 0]],
//                 "baseline_radius": [2, 2]}}                  // optional
//   ]
// }
//
// Numbers may be JSON integers, JSON floats (converted exactly as binary
// doubles) or strings in "p/q" / decimal form. Writing always uses integers
// or "p/q" strings, so a save/load cycle is bit-exact.

#ifndef MSR_INSTANCE_IO_HPP_
#define MSR_INSTANCE_IO_HPP_

#include <string>

#include "json.hpp"
#include "msr/core.hpp"

namespace msr {

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& x);

nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& j);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

}  // namespace msr

#endif  // MSR_INSTANCE_IO_HPP_

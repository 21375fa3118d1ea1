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

#ifndef ASCOVER_INSTANCE_HPP_
#define ASCOVER_INSTANCE_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "ascover/distribution.hpp"
#include "ascover/items.hpp"
#include "ascover/utility.hpp"

namespace ascover {

// One utility to cover: the input of the single-function greedy.
struct AscInstance {
  ItemSet items;
  UtilityModel utility;
  std::shared_ptr<const Distribution> distribution;
};

// Several utilities sharing one item pool and one quota.
struct MultiInstance {
  ItemSet items;
  std::vector<UtilityModel> utilities;
  std::shared_ptr<const Distribution> distribution;
};

// Checks f(phi) == Q on every scenario of the support.
bool is_coverable(const UtilityModel& f, const ScenarioDistribution& dist);

// Scenario view of any distribution: passes ScenarioDistributions through
// and expands ProductDistributions (subject to cap).  Needed by the exact
// evaluators and the oracle, which walk explicit scenario sets.
std::shared_ptr<const ScenarioDistribution> as_scenarios(
    const std::shared_ptr<const Distribution>& dist, int item_count,
    std::int64_t cap = 1000000);

}  // namespace ascover

#endif  // ASCOVER_INSTANCE_HPP_

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

#include "ascover/instance.hpp"

#include <numeric>

#include "ascover/errors.hpp"

namespace ascover {

bool is_coverable(const UtilityModel& f, const ScenarioDistribution& dist) {
  for (int i = 0; i < dist.scenario_count(); ++i) {
    if (!f.covered(dist.scenario(i))) return false;
  }
  return true;
}

std::shared_ptr<const ScenarioDistribution> as_scenarios(
    const std::shared_ptr<const Distribution>& dist, int item_count,
    std::int64_t cap) {
  if (!dist) throw Error("missing distribution");
  if (auto scenarios =
          std::dynamic_pointer_cast<const ScenarioDistribution>(dist)) {
    return scenarios;
  }
  auto product = std::dynamic_pointer_cast<const ProductDistribution>(dist);
  if (!product) throw Error("unknown distribution backend");
  std::vector<ItemId> items(item_count);
  std::iota(items.begin(), items.end(), 0);
  return std::make_shared<ScenarioDistribution>(
      product_to_scenarios(*product, items, cap));
}

}  // namespace ascover

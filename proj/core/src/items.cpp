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

#include "ascover/items.hpp"

#include <numeric>
#include <utility>

namespace ascover {

ItemSet::ItemSet(std::vector<Rational> costs) : costs_(std::move(costs)) {
  for (Rational& cost : costs_) {
    cost.canonicalize();
    if (cost <= 0) throw Error("item costs must be strictly positive");
  }
}

ItemSet ItemSet::unit(int count) {
  return ItemSet(std::vector<Rational>(count, Rational(1)));
}

const Rational& ItemSet::cost(ItemId id) const {
  if (id < 0 || id >= size()) throw Error("item id out of range");
  return costs_[id];
}

Rational ItemSet::total_cost() const {
  Rational total(0);
  for (const Rational& cost : costs_) total += cost;
  return total;
}

bool ItemSet::integral_costs() const {
  for (const Rational& cost : costs_) {
    if (!is_integral(cost)) return false;
  }
  return true;
}

std::vector<ItemId> ItemSet::all_ids() const {
  std::vector<ItemId> ids(costs_.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

}  // namespace ascover

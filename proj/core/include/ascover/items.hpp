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

#ifndef ASCOVER_ITEMS_HPP_
#define ASCOVER_ITEMS_HPP_

#include <cstdint>
#include <vector>

#include "ascover/errors.hpp"
#include "ascover/rational.hpp"

namespace ascover {

using ItemId = std::int32_t;
using Outcome = std::int32_t;

// The ground set of selectable items with dense ids 0..n-1.  Costs are
// strictly positive rationals.
class ItemSet {
 public:
  explicit ItemSet(std::vector<Rational> costs);

  // n items, each of cost one.
  static ItemSet unit(int count);

  int size() const { return static_cast<int>(costs_.size()); }
  const Rational& cost(ItemId id) const;
  Rational total_cost() const;
  bool integral_costs() const;
  std::vector<ItemId> all_ids() const;

 private:
  std::vector<Rational> costs_;
};

}  // namespace ascover

#endif  // ASCOVER_ITEMS_HPP_

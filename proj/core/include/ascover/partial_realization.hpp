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

#ifndef ASCOVER_PARTIAL_REALIZATION_HPP_
#define ASCOVER_PARTIAL_REALIZATION_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "ascover/items.hpp"

namespace ascover {

// A set of (item, outcome) observations with distinct items.  This is the
// state a policy sees: which items were selected and what each returned.
// Pairs are kept sorted by item id, so equal observation sets compare equal
// regardless of observation order.
class PartialRealization {
 public:
  PartialRealization() = default;

  // Throws ItemAlreadyObserved if an item repeats.
  PartialRealization(std::initializer_list<std::pair<ItemId, Outcome>> obs);

  // Adopts a pair list that is already strictly ascending by item id;
  // throws ItemAlreadyObserved if it is not.
  static PartialRealization from_sorted_pairs(
      std::vector<std::pair<ItemId, Outcome>> pairs);

  bool contains(ItemId item) const;
  std::optional<Outcome> outcome_of(ItemId item) const;

  // Copy extended by one observation.  Throws ItemAlreadyObserved if the
  // item is already present.
  PartialRealization with(ItemId item, Outcome outcome) const;

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  // Observations in ascending item order.
  const std::vector<std::pair<ItemId, Outcome>>& pairs() const {
    return pairs_;
  }

  std::vector<ItemId> domain() const;

  bool operator==(const PartialRealization&) const = default;
  auto operator<=>(const PartialRealization&) const = default;

 private:
  std::vector<std::pair<ItemId, Outcome>> pairs_;
};

// True iff every observation of sub also appears in super (the "is a
// sub-history of" partial order).
bool is_subrealization(const PartialRealization& sub,
                       const PartialRealization& super);

// True iff no shared item has differing outcomes, i.e. the two observation
// sets are consistent with a common realization.
bool are_consistent(const PartialRealization& a, const PartialRealization& b);

}  // namespace ascover

#endif  // ASCOVER_PARTIAL_REALIZATION_HPP_

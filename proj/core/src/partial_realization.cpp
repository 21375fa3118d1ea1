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

#include "ascover/partial_realization.hpp"

#include <algorithm>
#include <string>

#include "ascover/errors.hpp"

namespace ascover {

PartialRealization::PartialRealization(
    std::initializer_list<std::pair<ItemId, Outcome>> obs) {
  for (const auto& [item, outcome] : obs) {
    *this = with(item, outcome);
  }
}

PartialRealization PartialRealization::from_sorted_pairs(
    std::vector<std::pair<ItemId, Outcome>> pairs) {
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i - 1].first >= pairs[i].first) {
      throw ItemAlreadyObserved("pair list not strictly ascending by item");
    }
  }
  PartialRealization psi;
  psi.pairs_ = std::move(pairs);
  return psi;
}

namespace {

// Iterator to the entry for item, or end.
auto find_item(const std::vector<std::pair<ItemId, Outcome>>& pairs,
               ItemId item) {
  auto it = std::lower_bound(
      pairs.begin(), pairs.end(), item,
      [](const auto& pair, ItemId id) { return pair.first < id; });
  if (it != pairs.end() && it->first == item) return it;
  return pairs.end();
}

}  // namespace

bool PartialRealization::contains(ItemId item) const {
  return find_item(pairs_, item) != pairs_.end();
}

std::optional<Outcome> PartialRealization::outcome_of(ItemId item) const {
  auto it = find_item(pairs_, item);
  if (it == pairs_.end()) return std::nullopt;
  return it->second;
}

PartialRealization PartialRealization::with(ItemId item,
                                            Outcome outcome) const {
  if (contains(item)) {
    throw ItemAlreadyObserved("item " + std::to_string(item) +
                              " already observed");
  }
  PartialRealization extended(*this);
  auto pos = std::lower_bound(
      extended.pairs_.begin(), extended.pairs_.end(), item,
      [](const auto& pair, ItemId id) { return pair.first < id; });
  extended.pairs_.insert(pos, {item, outcome});
  return extended;
}

std::vector<ItemId> PartialRealization::domain() const {
  std::vector<ItemId> items;
  items.reserve(pairs_.size());
  for (const auto& [item, outcome] : pairs_) items.push_back(item);
  return items;
}

bool is_subrealization(const PartialRealization& sub,
                       const PartialRealization& super) {
  // Both pair lists are sorted by item, so one merge pass suffices.
  return std::includes(super.pairs().begin(), super.pairs().end(),
                       sub.pairs().begin(), sub.pairs().end());
}

bool are_consistent(const PartialRealization& a, const PartialRealization& b) {
  auto ia = a.pairs().begin();
  auto ib = b.pairs().begin();
  while (ia != a.pairs().end() && ib != b.pairs().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      if (ia->second != ib->second) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

}  // namespace ascover

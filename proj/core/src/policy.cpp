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

#include "ascover/policy.hpp"

#include <utility>

#include "ascover/errors.hpp"

namespace ascover {

Policy::Policy(Kind kind, DecideFn decide)
    : kind_(kind), decide_(std::move(decide)) {
  if (!decide_) throw Error("policy without a decision function");
}

std::optional<ItemId> Policy::decide(const PartialRealization& psi) const {
  return decide_(psi);
}

Policy truncate_policy(Policy base, ItemSet items, Rational budget) {
  if (budget < 0) throw Error("truncation budget must be non-negative");
  return Policy(
      base.kind(),
      [base = std::move(base), items = std::move(items),
       budget = std::move(budget)](const PartialRealization& psi)
          -> std::optional<ItemId> {
        std::optional<ItemId> next = base.decide(psi);
        if (!next) return std::nullopt;
        Rational committed(0);
        for (const auto& [item, outcome] : psi.pairs()) {
          committed += items.cost(item);
        }
        if (committed + items.cost(*next) > budget) return std::nullopt;
        return next;
      });
}

}  // namespace ascover

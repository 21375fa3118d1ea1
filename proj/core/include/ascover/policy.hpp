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

#ifndef ASCOVER_POLICY_HPP_
#define ASCOVER_POLICY_HPP_

#include <functional>
#include <optional>

#include "ascover/items.hpp"
#include "ascover/partial_realization.hpp"
#include "ascover/rational.hpp"

namespace ascover {

// A policy maps the observed state to the next item to select, or nothing
// to terminate.  Policies are closures, never materialized decision trees,
// so memory stays linear in trace length even when the tree would be
// exponential.  decide must be deterministic and must never return an item
// already observed in psi.
class Policy {
 public:
  enum class Kind { greedy, multi_greedy, oracle, custom };
  using DecideFn =
      std::function<std::optional<ItemId>(const PartialRealization&)>;

  Policy(Kind kind, DecideFn decide);

  std::optional<ItemId> decide(const PartialRealization& psi) const;
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
  DecideFn decide_;
};

// Stops base as late as possible while keeping total selected cost <= budget.
// The cost committed at state psi is the summed cost of dom(psi): items are
// only charged once completed, matching the rule that outcomes are observed
// at completion time.
Policy truncate_policy(Policy base, ItemSet items, Rational budget);

}  // namespace ascover

#endif  // ASCOVER_POLICY_HPP_

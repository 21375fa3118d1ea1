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

#ifndef ASCOVER_GREEDY_HPP_
#define ASCOVER_GREEDY_HPP_

#include <memory>
#include <span>
#include <vector>

#include "ascover/distribution.hpp"
#include "ascover/items.hpp"
#include "ascover/partial_realization.hpp"
#include "ascover/policy.hpp"
#include "ascover/utility.hpp"

namespace ascover {

// Conditional expected marginal benefit of selecting item at state psi:
//   sum over outcomes w of Pr[outcome w | psi] * (f(psi + (item,w)) - f(psi)).
// Exact.  Throws ItemAlreadyObserved / ZeroProbabilityRealization.
Rational marginal_benefit(const UtilityModel& f, const Distribution& dist,
                          const PartialRealization& psi, ItemId item);

// The greedy choice: item of remaining maximizing marginal benefit divided
// by cost, ties broken by smallest id.  Requires f uncovered at psi.  The
// winning ratio must be strictly positive; a zero maximum means no item can
// make progress while f is below quota, which breaks coverability, so
// CoverabilityViolation is thrown rather than looping.
ItemId greedy_step(const UtilityModel& f, const Distribution& dist,
                   const ItemSet& items, const PartialRealization& psi,
                   std::span<const ItemId> remaining);

// Cost-benefit greedy for a single utility.  decide(psi) terminates once f
// is covered, otherwise returns greedy_step over the unobserved items.
// Stateless between calls: the whole state is psi.
Policy greedy_policy(UtilityModel f, std::shared_ptr<const Distribution> dist,
                     ItemSet items);

// Greedy for several utilities sharing one quota: picks the item maximizing
//   (1/c_e) * sum over uncovered r of benefit_r(e|psi) / (Q - f_r(psi)),
// terminating when every f_r is covered.  The per-function denominator
// prioritizes functions close to their quota.  With k=1 the decisions
// coincide with greedy_policy: dividing by the constant Q - f(psi) never
// changes an argmax with id tie-break.  Throws MismatchedQuota on
// construction if the quotas differ.
Policy multi_greedy_policy(std::vector<UtilityModel> fs,
                           std::shared_ptr<const Distribution> dist,
                           ItemSet items);

}  // namespace ascover

#endif  // ASCOVER_GREEDY_HPP_

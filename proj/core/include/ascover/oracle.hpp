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

#ifndef ASCOVER_ORACLE_HPP_
#define ASCOVER_ORACLE_HPP_

#include <cstdint>
#include <span>

#include "ascover/distribution.hpp"
#include "ascover/items.hpp"
#include "ascover/policy.hpp"
#include "ascover/rational.hpp"
#include "ascover/utility.hpp"

namespace ascover {

// Exact optimal policies by memoized recursion, for desk-scale verification
// only.  States are canonicalized either by the consistent-scenario set
// plus current utility values (sound whenever those determine all future
// behavior, as for the identification and coverage utilities shipped here)
// or by the full observation history.  Budgets are hard errors, never
// silent approximation.
struct OracleOptions {
  enum class KeyMode {
    // Memo key = (consistent scenario set, utility value vector).
    posterior_and_value,
    // Memo key = the partial realization itself.  Required when equal
    // posteriors and values can still lead to different futures (e.g.
    // utilities that depend on which outcomes produced the value).
    full_realization,
  };

  int max_scenarios = 12;
  int max_items = 10;
  std::int64_t node_budget = 10000000;
  KeyMode key_mode = KeyMode::posterior_and_value;
};

struct OracleSolution {
  Rational value;
  Policy policy;
};

// Minimum expected terminal cost over all policies covering f.  The
// returned policy replays the argmin decisions; running it through
// run_policy reproduces `value` exactly.  Throws InstanceTooLarge over the
// caps or node budget.
OracleSolution optimal_expected_cost(const UtilityModel& f,
                                     const ScenarioDistribution& dist,
                                     const ItemSet& items,
                                     const OracleOptions& options = {});

// Minimum E[C^p].  The state carries elapsed cost (moments are not
// additive over subtrees), so costs must be integral to keep the state
// space finite: throws NonIntegralCosts otherwise.
Rational optimal_moment(const UtilityModel& f,
                        const ScenarioDistribution& dist,
                        const ItemSet& items, int p,
                        const OracleOptions& options = {});

// Minimum over policies of the summed p-th cover-time moments across fs.
// State additionally tracks which utilities are already covered.
Rational optimal_multi_cover_sum(
    std::span<const UtilityModel> fs, const ScenarioDistribution& dist,
    const ItemSet& items, int p,
    const OracleOptions& options = {.max_scenarios = 6, .max_items = 8});

}  // namespace ascover

#endif  // ASCOVER_ORACLE_HPP_

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

#include "ascover/trace.hpp"

#include <string>

#include "ascover/errors.hpp"

namespace ascover {

ExecutionTrace run_policy(const Policy& policy, const PartialRealization& phi,
                          const ItemSet& items,
                          std::span<const UtilityModel> fs) {
  ExecutionTrace trace;
  trace.cover_times.assign(fs.size(), std::nullopt);

  PartialRealization psi;
  Rational now(0);

  // Cover events before any selection.
  for (std::size_t r = 0; r < fs.size(); ++r) {
    if (fs[r].covered(psi)) trace.cover_times[r] = Rational(0);
  }

  const std::size_t step_limit = phi.size();
  while (true) {
    std::optional<ItemId> choice = policy.decide(psi);
    if (!choice) break;
    if (trace.steps.size() >= step_limit) {
      throw PolicyStuck("policy ran past the item count without terminating");
    }
    std::optional<Outcome> outcome = phi.outcome_of(*choice);
    if (!outcome) {
      throw PolicyStuck("policy chose item " + std::to_string(*choice) +
                        " outside the realization's domain");
    }
    if (psi.contains(*choice)) {
      throw PolicyStuck("policy chose already-observed item " +
                        std::to_string(*choice));
    }

    TraceStep step;
    step.item = *choice;
    step.outcome = *outcome;
    step.start_time = now;
    now += items.cost(*choice);
    step.end_time = now;
    trace.steps.push_back(step);

    // The outcome becomes visible only now that the item completed.
    psi = psi.with(*choice, *outcome);
    for (std::size_t r = 0; r < fs.size(); ++r) {
      if (!trace.cover_times[r] && fs[r].covered(psi)) {
        trace.cover_times[r] = now;
      }
    }
  }

  trace.terminal_cost = now;
  return trace;
}

}  // namespace ascover

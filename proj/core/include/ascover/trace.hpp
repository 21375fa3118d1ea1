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

#ifndef ASCOVER_TRACE_HPP_
#define ASCOVER_TRACE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "ascover/items.hpp"
#include "ascover/partial_realization.hpp"
#include "ascover/policy.hpp"
#include "ascover/rational.hpp"
#include "ascover/utility.hpp"

namespace ascover {

struct TraceStep {
  ItemId item;
  Outcome outcome;
  // The item occupies [start_time, end_time); its outcome becomes visible
  // to the policy only at end_time.
  Rational start_time;
  Rational end_time;
};

struct ExecutionTrace {
  std::vector<TraceStep> steps;
  Rational terminal_cost{0};
  // cover_times[r] is the earliest end time t with f_r(observed by t) at
  // quota, 0 if f_r is covered before any selection, and absent if the
  // policy stopped without covering f_r.
  std::vector<std::optional<Rational>> cover_times;
};

// Simulates policy against the full realization phi: repeatedly query
// decide, reveal phi's outcome for the chosen item, advance time by its
// cost.  Records the terminal cost and one cover time per utility in fs.
// Throws PolicyStuck if decide returns an already-observed item or runs
// past n selections.
ExecutionTrace run_policy(const Policy& policy, const PartialRealization& phi,
                          const ItemSet& items,
                          std::span<const UtilityModel> fs);

}  // namespace ascover

#endif  // ASCOVER_TRACE_HPP_

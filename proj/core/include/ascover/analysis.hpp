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

#ifndef ASCOVER_ANALYSIS_HPP_
#define ASCOVER_ANALYSIS_HPP_

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ascover/distribution.hpp"
#include "ascover/items.hpp"
#include "ascover/policy.hpp"
#include "ascover/rational.hpp"
#include "ascover/trace.hpp"
#include "ascover/utility.hpp"

namespace ascover {

// Finite law of a non-negative cost: (cost, weight) atoms, costs distinct
// ascending, weights positive and summing to one exactly.  Construction
// merges equal costs and sorts.
class CostDistribution {
 public:
  explicit CostDistribution(
      std::vector<std::pair<Rational, Rational>> atoms);

  const std::vector<std::pair<Rational, Rational>>& atoms() const {
    return atoms_;
  }

 private:
  std::vector<std::pair<Rational, Rational>> atoms_;
};

// E[C^p], exact.
Rational moment_direct(const CostDistribution& law, int p);

// Right-continuous non-increasing step function on [0, infinity),
// represented by its breakpoints: value_at(t) is the value attached to the
// last breakpoint at or before t.  The first breakpoint is at time 0, the
// last value is the function's value from there on.
class StepCurve {
 public:
  explicit StepCurve(std::vector<std::pair<Rational, Rational>> breakpoints);

  Rational value_at(const Rational& t) const;
  const std::vector<std::pair<Rational, Rational>>& breakpoints() const {
    return breakpoints_;
  }

 private:
  std::vector<std::pair<Rational, Rational>> breakpoints_;
};

// Tail function t -> Pr[C > t] of a cost law.
StepCurve tail_curve(const CostDistribution& law);

// p-th moment from the tail function via the identity
//   E[C^p] = p * integral of t^(p-1) * Pr[C > t] dt,
// evaluated exactly piecewise: sum over intervals of
// value * (t_next^p - t^p).  Requires the curve to reach zero (finite law);
// equals moment_direct of the underlying distribution exactly.
Rational moment_integral(const StepCurve& tail, int p);

// Exact laws of one policy: the terminal-cost distribution and, per utility
// in fs, the distribution of its cover time.  Computed by walking the tree
// of reachable observation histories once, so scenarios sharing a prefix
// share the policy's decisions.  A utility never covered on some scenario
// of positive weight makes its cover law partial; that raises InvalidTrace.
struct PolicyCostLaws {
  CostDistribution terminal;
  std::vector<CostDistribution> cover_times;
};

PolicyCostLaws cost_distribution(const Policy& policy,
                                 const ScenarioDistribution& dist,
                                 const ItemSet& items,
                                 std::span<const UtilityModel> fs);

// Non-completion curve t -> Pr[C > t] where C is f's cover time under the
// policy: 1 before the first possible completion, 0 at and beyond the total
// item cost.
StepCurve completion_curve(const Policy& policy,
                           const ScenarioDistribution& dist,
                           const ItemSet& items, const UtilityModel& f);

// Progress score of a trace: sum over steps of
//   (f_after - f_before) / (Q - f_before),
// skipping steps with no progress.  For any greedy trace this never exceeds
// 1 + ln(Q/eta): each term is at most the harmonic mass the step consumes.
// InvalidTrace if a step starts at Q - f_before <= 0 (a covered state that
// kept selecting).
Rational score_trace(const ExecutionTrace& trace, const UtilityModel& f);

// The diagnostic ceiling 1 + ln(quota/granularity) for score_trace.
double trace_score_limit(const UtilityModel& f);

// Sum over utilities of E[cover time ^ p]; the multi-cover objective that
// generalizes min-sum set cover (where it is the summed coverage times).
Rational multi_cover_objective(const Policy& policy,
                               const ScenarioDistribution& dist,
                               const ItemSet& items,
                               std::span<const UtilityModel> fs, int p);

// CSV export "t,value" per breakpoint, 6-place decimals.
void save_curve_csv(std::ostream& out, const StepCurve& curve);

}  // namespace ascover

#endif  // ASCOVER_ANALYSIS_HPP_

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

#include "ascover/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "ascover/errors.hpp"

namespace ascover {

CostDistribution::CostDistribution(
    std::vector<std::pair<Rational, Rational>> atoms) {
  if (atoms.empty()) throw Error("cost distribution with no atoms");
  std::map<Rational, Rational> merged;
  for (auto& [cost, weight] : atoms) {
    cost.canonicalize();
    weight.canonicalize();
    if (cost < 0) throw Error("negative cost atom");
    if (weight <= 0) throw Error("atom weights must be positive");
    merged[cost] += weight;
  }
  Rational total(0);
  for (const auto& [cost, weight] : merged) total += weight;
  if (total != 1) {
    throw Error("atom weights sum to " + to_string(total) + ", expected 1");
  }
  atoms_.assign(merged.begin(), merged.end());
}

Rational moment_direct(const CostDistribution& law, int p) {
  if (p < 1) throw Error("moment order must be at least 1");
  Rational moment(0);
  for (const auto& [cost, weight] : law.atoms()) {
    moment += weight * rational_pow(cost, p);
  }
  return moment;
}

StepCurve::StepCurve(std::vector<std::pair<Rational, Rational>> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.empty()) throw Error("step curve with no breakpoints");
  if (breakpoints_.front().first != 0) {
    throw Error("step curves must start at time 0");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i - 1].first >= breakpoints_[i].first) {
      throw Error("breakpoint times must be strictly increasing");
    }
    if (breakpoints_[i - 1].second < breakpoints_[i].second) {
      throw Error("step curve must be non-increasing");
    }
  }
}

Rational StepCurve::value_at(const Rational& t) const {
  if (t < 0) throw Error("step curves live on [0, infinity)");
  // Last breakpoint at or before t; right continuity.
  auto it = std::upper_bound(
      breakpoints_.begin(), breakpoints_.end(), t,
      [](const Rational& value, const auto& bp) { return value < bp.first; });
  return std::prev(it)->second;
}

StepCurve tail_curve(const CostDistribution& law) {
  // Pr[C > t] drops by the atom weight at each atom cost.
  std::vector<std::pair<Rational, Rational>> breakpoints;
  Rational remaining(1);
  if (law.atoms().front().first != 0) {
    breakpoints.emplace_back(Rational(0), remaining);
  }
  for (const auto& [cost, weight] : law.atoms()) {
    remaining -= weight;
    breakpoints.emplace_back(cost, remaining);
  }
  return StepCurve(std::move(breakpoints));
}

Rational moment_integral(const StepCurve& tail, int p) {
  if (p < 1) throw Error("moment order must be at least 1");
  const auto& breakpoints = tail.breakpoints();
  if (breakpoints.back().second != 0) {
    throw Error("tail never reaches zero; the moment integral diverges");
  }
  // p * integral of t^(p-1) over [t_i, t_{i+1}) is t_{i+1}^p - t_i^p.
  Rational total(0);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    total += breakpoints[i].second * (rational_pow(breakpoints[i + 1].first, p) -
                                      rational_pow(breakpoints[i].first, p));
  }
  return total;
}

namespace {

// Cover bookkeeping for the shared-prefix walk below.
struct LawAccumulator {
  std::map<Rational, Rational> terminal;
  std::vector<std::map<Rational, Rational>> cover;
};

}  // namespace

PolicyCostLaws cost_distribution(const Policy& policy,
                                 const ScenarioDistribution& dist,
                                 const ItemSet& items,
                                 std::span<const UtilityModel> fs) {
  LawAccumulator laws;
  laws.cover.resize(fs.size());

  // Depth-first over reachable observation histories.  All scenarios
  // consistent with a history share the policy's next decision, so each
  // distinct history costs one decide() call instead of one per scenario.
  struct Frame {
    PartialRealization psi;
    std::vector<int> scenarios;
    Rational elapsed;
    std::vector<bool> covered;  // per utility, covered at or before psi
  };

  Frame root;
  root.elapsed = Rational(0);
  root.scenarios.resize(dist.scenario_count());
  for (int i = 0; i < dist.scenario_count(); ++i) root.scenarios[i] = i;
  root.covered.assign(fs.size(), false);
  for (std::size_t r = 0; r < fs.size(); ++r) {
    if (fs[r].covered(root.psi)) {
      // Covered before any selection: the whole mass sits at time 0.
      root.covered[r] = true;
      laws.cover[r][Rational(0)] = 1;
    }
  }

  std::vector<Frame> stack;
  stack.push_back(std::move(root));
  const std::size_t step_limit = dist.item_count();

  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();

    std::optional<ItemId> choice = policy.decide(frame.psi);
    if (!choice) {
      Rational weight(0);
      for (int i : frame.scenarios) weight += dist.weight(i);
      laws.terminal[frame.elapsed] += weight;
      for (std::size_t r = 0; r < fs.size(); ++r) {
        if (!frame.covered[r]) {
          throw InvalidTrace(
              "policy terminated before covering utility " +
              std::to_string(r) + "; its cover-time law is partial");
        }
      }
      continue;
    }
    if (frame.psi.size() >= step_limit) {
      throw PolicyStuck("policy ran past the item count without terminating");
    }
    if (frame.psi.contains(*choice)) {
      throw PolicyStuck("policy chose already-observed item " +
                        std::to_string(*choice));
    }

    // Split the consistent scenarios by the chosen item's outcome.
    std::map<Outcome, std::vector<int>> branches;
    for (int i : frame.scenarios) {
      branches[dist.scenario_outcome(i, *choice)].push_back(i);
    }
    const Rational end_time = frame.elapsed + items.cost(*choice);
    for (auto& [outcome, scenario_ids] : branches) {
      Frame next;
      next.psi = frame.psi.with(*choice, outcome);
      next.scenarios = std::move(scenario_ids);
      next.elapsed = end_time;
      next.covered = frame.covered;
      for (std::size_t r = 0; r < fs.size(); ++r) {
        if (!next.covered[r] && fs[r].covered(next.psi)) {
          next.covered[r] = true;
          Rational weight(0);
          for (int i : next.scenarios) weight += dist.weight(i);
          laws.cover[r][end_time] += weight;
        }
      }
      stack.push_back(std::move(next));
    }
  }

  auto to_distribution = [](const std::map<Rational, Rational>& atoms) {
    return CostDistribution(
        std::vector<std::pair<Rational, Rational>>(atoms.begin(), atoms.end()));
  };

  std::vector<CostDistribution> cover_laws;
  cover_laws.reserve(fs.size());
  for (const auto& atoms : laws.cover) cover_laws.push_back(to_distribution(atoms));
  return PolicyCostLaws{to_distribution(laws.terminal), std::move(cover_laws)};
}

StepCurve completion_curve(const Policy& policy,
                           const ScenarioDistribution& dist,
                           const ItemSet& items, const UtilityModel& f) {
  const UtilityModel fs[] = {f};
  PolicyCostLaws laws = cost_distribution(policy, dist, items, fs);
  return tail_curve(laws.cover_times.front());
}

Rational score_trace(const ExecutionTrace& trace, const UtilityModel& f) {
  const Rational& quota = f.quota();
  PartialRealization psi;
  Rational before = f.value(psi);
  Rational score(0);
  for (const TraceStep& step : trace.steps) {
    if (f.covered_value(before)) {
      throw InvalidTrace("trace kept selecting after reaching the quota");
    }
    psi = psi.with(step.item, step.outcome);
    const Rational after = f.value(psi);
    if (after != before) {
      score += (after - before) / (quota - before);
      before = after;
    }
  }
  return score;
}

double trace_score_limit(const UtilityModel& f) {
  return 1.0 + std::log(to_double(f.quota() / f.granularity()));
}

Rational multi_cover_objective(const Policy& policy,
                               const ScenarioDistribution& dist,
                               const ItemSet& items,
                               std::span<const UtilityModel> fs, int p) {
  PolicyCostLaws laws = cost_distribution(policy, dist, items, fs);
  Rational total(0);
  for (const CostDistribution& law : laws.cover_times) {
    total += moment_direct(law, p);
  }
  return total;
}

void save_curve_csv(std::ostream& out, const StepCurve& curve) {
  out << "t,value\n";
  for (const auto& [t, value] : curve.breakpoints()) {
    out << decimal_string(t, 6) << ',' << decimal_string(value, 6) << '\n';
  }
}

}  // namespace ascover

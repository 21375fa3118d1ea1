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

#include "ascover/oracle.hpp"

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ascover/errors.hpp"

namespace ascover {

namespace {

void check_caps(const ScenarioDistribution& dist, const ItemSet& items,
                const OracleOptions& options) {
  if (dist.scenario_count() > options.max_scenarios) {
    throw InstanceTooLarge(
        "oracle scenario cap exceeded: " +
        std::to_string(dist.scenario_count()) + " > " +
        std::to_string(options.max_scenarios));
  }
  if (items.size() > options.max_items) {
    throw InstanceTooLarge("oracle item cap exceeded: " +
                           std::to_string(items.size()) + " > " +
                           std::to_string(options.max_items));
  }
}

// The DP state reached by history psi.  `consistent` is computed once per
// state; `values` holds every utility's value at psi.
struct State {
  PartialRealization psi;
  std::vector<int> consistent;
  std::vector<Rational> values;
  Rational elapsed{0};
};

// Memoized minimizer shared by the three objectives.  States reached via
// different histories collapse when their keys match; with
// posterior_and_value keys that is (consistent set, utility values,
// elapsed), which determines all future behavior whenever the utilities
// are functions of those quantities (true of the identification and
// coverage utilities shipped here).  full_realization keys trade the
// collapse for unconditional soundness.
class Solver {
 public:
  Solver(std::span<const UtilityModel> fs, const ScenarioDistribution& dist,
         const ItemSet& items, int p, bool track_elapsed,
         OracleOptions options)
      : fs_(fs.begin(), fs.end()),
        dist_(dist),
        items_(items),
        p_(p),
        track_elapsed_(track_elapsed),
        options_(options) {}

  struct Entry {
    Rational value;
    std::optional<ItemId> best;
  };

  State make_root() const { return make_state(PartialRealization()); }

  State make_state(PartialRealization psi) const {
    State state;
    state.consistent = dist_.consistent_scenarios(psi);
    if (state.consistent.empty()) {
      throw ZeroProbabilityRealization(
          "oracle queried on a zero-probability history");
    }
    state.values.reserve(fs_.size());
    for (const UtilityModel& f : fs_) state.values.push_back(f.value(psi));
    for (const auto& [item, outcome] : psi.pairs()) {
      state.elapsed += items_.cost(item);
    }
    state.psi = std::move(psi);
    return state;
  }

  // Minimal expected remaining objective from `state`.  For the moment
  // objectives the contribution of a cover event at absolute time t is t^p,
  // accounted where the event happens, so the recursion returns the full
  // (not conditional-remaining) expectation over the subtree.
  const Entry& solve(const State& state) {
    const std::string key = state_key(state);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++nodes_ > options_.node_budget) {
      throw InstanceTooLarge("oracle node budget exceeded");
    }

    Entry entry{Rational(0), std::nullopt};
    if (!finished(state)) {
      bool first = true;
      for (ItemId item = 0; item < items_.size(); ++item) {
        if (state.psi.contains(item)) continue;
        const Rational candidate = action_value(state, item);
        if (first || candidate < entry.value) {
          entry.value = candidate;
          entry.best = item;
          first = false;
        }
      }
      if (first) {
        throw CoverabilityViolation(
            "no items left but some utility is uncovered");
      }
    }
    return memo_.emplace(std::move(key), std::move(entry)).first->second;
  }

  bool finished(const State& state) const {
    for (std::size_t r = 0; r < fs_.size(); ++r) {
      if (!fs_[r].covered_value(state.values[r])) return false;
    }
    return true;
  }

  // Total weight of the scenarios consistent with the state.
  Rational state_weight(const State& state) const {
    Rational weight(0);
    for (int i : state.consistent) weight += dist_.weight(i);
    return weight;
  }

  std::int64_t nodes() const { return nodes_; }

 protected:
  // Expected objective when selecting `item` at `state`: branch on the
  // item's outcome among consistent scenarios.
  virtual Rational action_value(const State& state, ItemId item) {
    std::map<Outcome, std::vector<int>> branches;
    for (int i : state.consistent) {
      branches[dist_.scenario_outcome(i, item)].push_back(i);
    }
    const Rational here = state_weight(state);
    Rational total = immediate_cost(state, item);
    for (auto& [outcome, scenario_ids] : branches) {
      State child = make_child(state, item, outcome, std::move(scenario_ids));
      Rational branch_probability = Rational(0);
      for (int i : child.consistent) branch_probability += dist_.weight(i);
      branch_probability /= here;
      total +=
          branch_probability * (transition_gain(state, child) + solve(child).value);
    }
    return total;
  }

  // Cost charged at selection time (expected-cost objective) -- zero for
  // the moment objectives, which charge at cover events instead.
  virtual Rational immediate_cost(const State& state, ItemId item) = 0;
  // Objective mass realized when moving to child (cover events).
  virtual Rational transition_gain(const State& state, const State& child) = 0;

  State make_child(const State& state, ItemId item, Outcome outcome,
                   std::vector<int> consistent) const {
    State child;
    child.psi = state.psi.with(item, outcome);
    child.consistent = std::move(consistent);
    child.values.reserve(fs_.size());
    for (const UtilityModel& f : fs_) child.values.push_back(f.value(child.psi));
    child.elapsed = state.elapsed + items_.cost(item);
    return child;
  }

  std::string state_key(const State& state) const {
    std::ostringstream key;
    if (options_.key_mode == OracleOptions::KeyMode::full_realization) {
      for (const auto& [item, outcome] : state.psi.pairs()) {
        key << item << ':' << outcome << ' ';
      }
    } else {
      for (int i : state.consistent) key << i << ' ';
      key << '|';
      for (const Rational& value : state.values) key << value.get_str() << ' ';
      if (track_elapsed_) key << '|' << state.elapsed.get_str();
    }
    return std::move(key).str();
  }

  std::vector<UtilityModel> fs_;
  const ScenarioDistribution& dist_;
  const ItemSet& items_;
  int p_;
  bool track_elapsed_;
  OracleOptions options_;
  std::map<std::string, Entry> memo_;
  std::int64_t nodes_ = 0;
};

// Expected terminal cost: charge item costs as they are selected.
class ExpectedCostSolver final : public Solver {
 public:
  ExpectedCostSolver(const UtilityModel& f, const ScenarioDistribution& dist,
                     const ItemSet& items, OracleOptions options)
      : Solver(std::span(&f, 1), dist, items, 1, false, options) {}

 protected:
  Rational immediate_cost(const State&, ItemId item) override {
    return items_.cost(item);
  }
  Rational transition_gain(const State&, const State&) override {
    return Rational(0);
  }
};

// Sum over utilities of cover-time^p: charge (absolute end time)^p for each
// utility first covered by the transition.  With a single utility this is
// E[C^p] of the terminal time, since a covering policy stops exactly when
// the utility covers.
class MomentSolver final : public Solver {
 public:
  MomentSolver(std::span<const UtilityModel> fs,
               const ScenarioDistribution& dist, const ItemSet& items, int p,
               OracleOptions options)
      : Solver(fs, dist, items, p, true, options) {}

 protected:
  Rational immediate_cost(const State&, ItemId) override {
    return Rational(0);
  }
  Rational transition_gain(const State& state, const State& child) override {
    Rational gain(0);
    for (std::size_t r = 0; r < fs_.size(); ++r) {
      if (!fs_[r].covered_value(state.values[r]) &&
          fs_[r].covered_value(child.values[r])) {
        gain += rational_pow(child.elapsed, p_);
      }
    }
    return gain;
  }
};

}  // namespace

OracleSolution optimal_expected_cost(const UtilityModel& f,
                                     const ScenarioDistribution& dist,
                                     const ItemSet& items,
                                     const OracleOptions& options) {
  check_caps(dist, items, options);
  auto solver =
      std::make_shared<ExpectedCostSolver>(f, dist, items, options);
  const State root = solver->make_root();
  const Rational value = solver->solve(root).value;

  // The extracted policy replays the memoized argmins, solving on demand
  // for states the optimum never visits.
  UtilityModel f_copy = f;
  Policy policy(
      Policy::Kind::oracle,
      [solver, f_copy](const PartialRealization& psi) -> std::optional<ItemId> {
        if (f_copy.covered(psi)) return std::nullopt;
        return solver->solve(solver->make_state(psi)).best;
      });
  return OracleSolution{value, std::move(policy)};
}

Rational optimal_moment(const UtilityModel& f,
                        const ScenarioDistribution& dist,
                        const ItemSet& items, int p,
                        const OracleOptions& options) {
  check_caps(dist, items, options);
  if (p < 1) throw Error("moment order must be at least 1");
  if (!items.integral_costs()) {
    throw NonIntegralCosts(
        "moment oracle requires integral costs so elapsed time takes "
        "few distinct values");
  }
  MomentSolver solver(std::span(&f, 1), dist, items, p, options);
  return solver.solve(solver.make_root()).value;
}

Rational optimal_multi_cover_sum(std::span<const UtilityModel> fs,
                                 const ScenarioDistribution& dist,
                                 const ItemSet& items, int p,
                                 const OracleOptions& options) {
  check_caps(dist, items, options);
  if (p < 1) throw Error("moment order must be at least 1");
  if (fs.empty()) return Rational(0);
  MomentSolver solver(fs, dist, items, p, options);
  return solver.solve(solver.make_root()).value;
}

}  // namespace ascover

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>
#include <vector>

#include "ascover/analysis.hpp"
#include "ascover/errors.hpp"
#include "ascover/greedy.hpp"
#include "ascover/minsum.hpp"
#include "ascover/odt.hpp"
#include "ascover/partial_realization.hpp"
#include "ascover/policy.hpp"
#include "ascover/trace.hpp"

#include "support/test_support.hpp"

using namespace ascover;
using support::deterministic_cover_instance;
using support::uniform_int;

namespace {

// h1 tests positive only on t0, h2 only on t1, h3 on neither.
AscInstance singleton_test_instance() {
  return build_odt({{1, 0}, {0, 1}, {0, 0}}, {Rational(1), Rational(1)}, true);
}

PartialRealization random_partial(std::mt19937_64& rng, int item_count,
                                  int outcome_count) {
  PartialRealization psi;
  for (ItemId e = 0; e < item_count; ++e) {
    if (uniform_int(rng, 0, 1) == 1) {
      psi = psi.with(e, uniform_int(rng, 0, outcome_count - 1));
    }
  }
  return psi;
}

}  // namespace

TEST_CASE("subrealization basics") {
  const PartialRealization empty;
  const PartialRealization one{{0, 1}};
  const PartialRealization two{{0, 1}, {1, 0}};
  const PartialRealization conflict{{0, 0}, {1, 0}};

  CHECK(is_subrealization(empty, empty));
  CHECK(is_subrealization(empty, two));
  CHECK(is_subrealization(one, two));
  CHECK_FALSE(is_subrealization(two, one));
  CHECK_FALSE(is_subrealization(one, conflict));
}

TEST_CASE("subrealization is a partial order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const PartialRealization a = random_partial(rng, 4, 2);
    const PartialRealization b = random_partial(rng, 4, 2);
    CHECK(is_subrealization(a, a));
    if (is_subrealization(a, b) && is_subrealization(b, a)) CHECK(a == b);
  }
}

TEST_CASE("consistency detects exactly the conflicting pairs") {
  CHECK(are_consistent(PartialRealization{{0, 1}}, PartialRealization{{1, 0}}));
  CHECK_FALSE(are_consistent(PartialRealization{{0, 1}},
                             PartialRealization{{0, 0}, {1, 0}}));

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const PartialRealization a = random_partial(rng, 5, 3);
    const PartialRealization b = random_partial(rng, 5, 3);
    bool conflict = false;
    for (const auto& [item, outcome] : a.pairs()) {
      const auto other = b.outcome_of(item);
      if (other && *other != outcome) conflict = true;
    }
    CHECK(are_consistent(a, b) == !conflict);
  }
}

TEST_CASE("a realization holds at most one outcome per item") {
  PartialRealization psi{{2, 1}};
  CHECK_THROWS_AS(psi.with(2, 0), ItemAlreadyObserved);
  CHECK(psi.with(1, 0).pairs() ==
        std::vector<std::pair<ItemId, Outcome>>{{1, 0}, {2, 1}});
}

TEST_CASE("marginal benefit on a uniform identification instance") {
  // Four hypotheses; t0 positive on the first two.  Either outcome of t0
  // eliminates two hypotheses.
  const AscInstance inst =
      build_odt({{1, 1}, {1, 0}, {0, 1}, {0, 0}}, {Rational(1), Rational(1)},
                true);
  CHECK(marginal_benefit(inst.utility, *inst.distribution,
                         PartialRealization{}, 0) == Rational(2));
}

TEST_CASE("marginal benefit reweights by the posterior") {
  // Scenarios over two items: (1,1) w 1/2, (1,0) w 1/4, (0,0) w 1/4.
  auto dist = std::make_shared<ScenarioDistribution>(
      ScenarioDistribution::from_rows(
          {0, 1}, {{1, 1}, {1, 0}, {0, 0}},
          {Rational(1, 2), Rational(1, 4), Rational(1, 4)}));
  UtilityModel count_positive(
      [](const PartialRealization& psi) {
        int count = 0;
        for (const auto& [item, outcome] : psi.pairs()) count += outcome;
        return Rational(count);
      },
      Rational(2), Rational(1));

  CHECK(marginal_benefit(count_positive, *dist, PartialRealization{{0, 1}}, 1) ==
        Rational(2, 3));
  CHECK_THROWS_AS(
      marginal_benefit(count_positive, *dist, PartialRealization{{0, 1}}, 0),
      ItemAlreadyObserved);
  CHECK_THROWS_AS(marginal_benefit(count_positive, *dist,
                                   PartialRealization{{0, 2}}, 1),
                  ZeroProbabilityRealization);
}

TEST_CASE("marginal benefit is zero once the utility is capped") {
  const AscInstance inst = build_odt(
      {{1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 0}},
      {Rational(1), Rational(1), Rational(1)}, true);
  // (t0=1, t1=1) identifies the first hypothesis; t2 can add nothing.
  const PartialRealization full{{0, 1}, {1, 1}};
  CHECK(inst.utility.covered(full));
  CHECK(marginal_benefit(inst.utility, *inst.distribution, full, 2) ==
        Rational(0));
}

TEST_CASE("greedy step prefers the best ratio and breaks ties by id") {
  const AscInstance inst = deterministic_cover_instance(
      {{1, 2}, {2, 3}, {3}}, {Rational(1), Rational(1), Rational(1)}, 3);
  const std::vector<ItemId> all = inst.items.all_ids();

  const ItemId first = greedy_step(inst.utility, *inst.distribution,
                                   inst.items, PartialRealization{}, all);
  CHECK(first == 0);  // ties with item 1 on ratio 2; smaller id wins

  const PartialRealization after{{0, 0}};
  const std::vector<ItemId> rest = {1, 2};
  CHECK(greedy_step(inst.utility, *inst.distribution, inst.items, after,
                    rest) == 1);  // both add one element; smaller id wins

  const std::vector<ItemId> only = {2};
  CHECK(greedy_step(inst.utility, *inst.distribution, inst.items, after,
                    only) == 2);
}

TEST_CASE("greedy step flags an instance that cannot make progress") {
  // One item covering nothing, quota 1: zero marginal everywhere.
  const AscInstance inst =
      deterministic_cover_instance({{}}, {Rational(1)}, 1);
  const std::vector<ItemId> all = {0};
  CHECK_THROWS_AS(greedy_step(inst.utility, *inst.distribution, inst.items,
                              PartialRealization{}, all),
                  CoverabilityViolation);
}

TEST_CASE("two-hypothesis identification needs exactly the separating test") {
  const AscInstance inst = build_odt({{1}, {0}}, {Rational(1)}, true);
  const Policy policy =
      greedy_policy(inst.utility, inst.distribution, inst.items);
  const UtilityModel fs[] = {inst.utility};
  const auto scen = as_scenarios(inst.distribution, inst.items.size());
  for (const ExecutionTrace& trace :
       support::run_on_support(policy, *scen, inst.items, fs)) {
    CHECK(trace.steps.size() == 1);
    CHECK(trace.terminal_cost == Rational(1));
  }
}

TEST_CASE("three-hypothesis singleton tests cost 5/3 in expectation") {
  const AscInstance inst = singleton_test_instance();
  const Policy policy =
      greedy_policy(inst.utility, inst.distribution, inst.items);
  const UtilityModel fs[] = {inst.utility};
  const auto scen = as_scenarios(inst.distribution, inst.items.size());
  const PolicyCostLaws laws = cost_distribution(policy, *scen, inst.items, fs);
  CHECK(moment_direct(laws.terminal, 1) == Rational(5, 3));
  CHECK(laws.terminal.atoms() ==
        std::vector<std::pair<Rational, Rational>>{{Rational(1), Rational(1, 3)},
                                                   {Rational(2), Rational(2, 3)}});
}

TEST_CASE("a zero-quota utility terminates before selecting anything") {
  const AscInstance inst =
      deterministic_cover_instance({{1}}, {Rational(1)}, 0);
  const Policy policy =
      greedy_policy(inst.utility, inst.distribution, inst.items);
  CHECK_FALSE(policy.decide(PartialRealization{}).has_value());
  const UtilityModel fs[] = {inst.utility};
  const auto scen = as_scenarios(inst.distribution, inst.items.size());
  const ExecutionTrace trace =
      run_policy(policy, scen->scenario(0), inst.items, fs);
  CHECK(trace.steps.empty());
  CHECK(trace.terminal_cost == Rational(0));
  REQUIRE(trace.cover_times.size() == 1);
  CHECK(trace.cover_times[0] == Rational(0));
}

TEST_CASE("traces on the singleton-test instance") {
  const AscInstance inst = singleton_test_instance();
  const Policy policy =
      greedy_policy(inst.utility, inst.distribution, inst.items);
  const UtilityModel fs[] = {inst.utility};

  const ExecutionTrace h1 =
      run_policy(policy, PartialRealization{{0, 1}, {1, 0}}, inst.items, fs);
  REQUIRE(h1.steps.size() == 1);
  CHECK(h1.steps[0].item == 0);
  CHECK(h1.steps[0].outcome == 1);
  CHECK(h1.terminal_cost == Rational(1));

  const ExecutionTrace h3 =
      run_policy(policy, PartialRealization{{0, 0}, {1, 0}}, inst.items, fs);
  REQUIRE(h3.steps.size() == 2);
  CHECK(h3.steps[0].item == 0);
  CHECK(h3.steps[1].item == 1);
  CHECK(h3.terminal_cost == Rational(2));
  CHECK(h3.steps[1].start_time == Rational(1));
  CHECK(h3.steps[1].end_time == Rational(2));
}

TEST_CASE("policy execution guards against non-termination") {
  const AscInstance inst = deterministic_cover_instance(
      {{1}, {2}}, {Rational(1), Rational(1)}, 2);
  const UtilityModel fs[] = {inst.utility};
  const PartialRealization phi{{0, 0}, {1, 0}};

  const Policy repeats(Policy::Kind::custom,
                       [](const PartialRealization&) { return ItemId{0}; });
  CHECK_THROWS_AS(run_policy(repeats, phi, inst.items, fs), PolicyStuck);

  const Policy outside(Policy::Kind::custom,
                       [](const PartialRealization&) { return ItemId{7}; });
  CHECK_THROWS_AS(run_policy(outside, phi, inst.items, fs), PolicyStuck);
}

TEST_CASE("truncation stops as late as possible without overshooting") {
  const ItemSet items({Rational(2), Rational(3), Rational(4)});
  const Policy in_order(Policy::Kind::custom,
                        [](const PartialRealization& psi) {
                          std::optional<ItemId> next;
                          for (ItemId e = 0; e < 3; ++e) {
                            if (!psi.contains(e)) return std::optional(e);
                          }
                          return next;
                        });
  const PartialRealization phi{{0, 0}, {1, 0}, {2, 0}};
  const std::vector<UtilityModel> none;

  const Policy capped = truncate_policy(in_order, items, Rational(6));
  const ExecutionTrace trace = run_policy(capped, phi, items, none);
  CHECK(trace.steps.size() == 2);
  CHECK(trace.terminal_cost == Rational(5));

  const Policy zero = truncate_policy(in_order, items, Rational(0));
  CHECK(run_policy(zero, phi, items, none).steps.empty());

  const Policy slack = truncate_policy(in_order, items, Rational(9));
  CHECK(run_policy(slack, phi, items, none).terminal_cost == Rational(9));
}

TEST_CASE("truncation safety on random identification instances") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const OdtInstance odt = support::random_odt(rng, 6, 5, false);
    const AscInstance inst = build_odt(odt);
    const Policy base =
        greedy_policy(inst.utility, inst.distribution, inst.items);
    const Rational budget(uniform_int(rng, 0, 8),
                          uniform_int(rng, 1, 2));
    const Policy capped = truncate_policy(base, inst.items, budget);
    const UtilityModel fs[] = {inst.utility};
    const auto scen = as_scenarios(inst.distribution, inst.items.size());
    for (int i = 0; i < scen->scenario_count(); ++i) {
      const ExecutionTrace trace =
          run_policy(capped, scen->scenario(i), inst.items, fs);
      CHECK(trace.terminal_cost <= budget);
      // Whatever the base policy would pick next would overshoot.
      PartialRealization end;
      for (const TraceStep& step : trace.steps) {
        end = end.with(step.item, step.outcome);
      }
      const auto next = base.decide(end);
      if (next) {
        CHECK(trace.terminal_cost + inst.items.cost(*next) > budget);
      }
    }
  }
}

TEST_CASE("greedy traces account time exactly and never lose utility") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const AscInstance inst =
        build_odt(support::random_odt(rng, 7, 5, false, 3));
    const Policy policy =
        greedy_policy(inst.utility, inst.distribution, inst.items);
    const UtilityModel fs[] = {inst.utility};
    const auto scen = as_scenarios(inst.distribution, inst.items.size());
    for (const ExecutionTrace& trace :
         support::run_on_support(policy, *scen, inst.items, fs)) {
      Rational elapsed(0);
      PartialRealization psi;
      Rational last_value = inst.utility.value(psi);
      for (const TraceStep& step : trace.steps) {
        CHECK(step.start_time == elapsed);
        elapsed += inst.items.cost(step.item);
        CHECK(step.end_time == elapsed);
        psi = psi.with(step.item, step.outcome);
        const Rational value = inst.utility.value(psi);
        CHECK(value >= last_value);
        last_value = value;
      }
      CHECK(trace.terminal_cost == elapsed);
      CHECK(static_cast<int>(trace.steps.size()) <= inst.items.size());
      CHECK(inst.utility.covered(psi));
    }
  }
}

TEST_CASE("greedy decisions are deterministic") {
  std::mt19937_64 rng(23);
  const AscInstance inst = build_odt(support::random_odt(rng, 8, 6));
  const Policy a = greedy_policy(inst.utility, inst.distribution, inst.items);
  const Policy b = greedy_policy(inst.utility, inst.distribution, inst.items);
  const auto scen = as_scenarios(inst.distribution, inst.items.size());
  for (int i = 0; i < scen->scenario_count(); ++i) {
    PartialRealization psi;
    const PartialRealization phi = scen->scenario(i);
    for (;;) {
      const auto pick_a = a.decide(psi);
      CHECK(pick_a == b.decide(psi));
      if (!pick_a) break;
      psi = psi.with(*pick_a, *phi.outcome_of(*pick_a));
    }
  }
}

TEST_CASE("positive scaling changes no greedy decision") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const AscInstance inst = build_odt(support::random_odt(rng, 7, 5, false));
    const UtilityModel base = inst.utility;
    const Rational factor(uniform_int(rng, 1, 7), uniform_int(rng, 1, 7));
    const UtilityModel scaled(
        [base, factor](const PartialRealization& psi) -> Rational {
          return factor * base.value(psi);
        },
        factor * base.quota(), factor * base.granularity());
    const Policy p = greedy_policy(base, inst.distribution, inst.items);
    const Policy q = greedy_policy(scaled, inst.distribution, inst.items);
    const auto scen = as_scenarios(inst.distribution, inst.items.size());
    for (int i = 0; i < scen->scenario_count(); ++i) {
      PartialRealization psi;
      const PartialRealization phi = scen->scenario(i);
      for (;;) {
        const auto pick = p.decide(psi);
        CHECK(pick == q.decide(psi));
        if (!pick) break;
        psi = psi.with(*pick, *phi.outcome_of(*pick));
      }
    }
  }
}

TEST_CASE("multi-utility greedy with one function mirrors plain greedy") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const AscInstance inst = build_odt(support::random_odt(rng, 7, 5, false));
    const Policy single =
        greedy_policy(inst.utility, inst.distribution, inst.items);
    const Policy multi =
        multi_greedy_policy({inst.utility}, inst.distribution, inst.items);
    const UtilityModel fs[] = {inst.utility};
    const auto scen = as_scenarios(inst.distribution, inst.items.size());
    const auto traces_a = support::run_on_support(single, *scen, inst.items, fs);
    const auto traces_b = support::run_on_support(multi, *scen, inst.items, fs);
    REQUIRE(traces_a.size() == traces_b.size());
    for (std::size_t i = 0; i < traces_a.size(); ++i) {
      REQUIRE(traces_a[i].steps.size() == traces_b[i].steps.size());
      for (std::size_t s = 0; s < traces_a[i].steps.size(); ++s) {
        CHECK(traces_a[i].steps[s].item == traces_b[i].steps[s].item);
      }
    }
  }
}

TEST_CASE("min-sum cover order and cover times") {
  const MultiInstance inst = build_minsum_setcover(
      {{0, 1}, {2}, {1, 2}}, {Rational(1), Rational(1), Rational(1)});
  const Policy policy =
      multi_greedy_policy(inst.utilities, inst.distribution, inst.items);
  const auto scen = as_scenarios(inst.distribution, inst.items.size());
  const ExecutionTrace trace =
      run_policy(policy, scen->scenario(0), inst.items, inst.utilities);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].item == 0);
  CHECK(trace.steps[1].item == 1);
  REQUIRE(trace.cover_times.size() == 3);
  CHECK(trace.cover_times[0] == Rational(1));
  CHECK(trace.cover_times[1] == Rational(1));
  CHECK(trace.cover_times[2] == Rational(2));
  CHECK(multi_cover_objective(policy, *scen, inst.items, inst.utilities, 1) ==
        Rational(4));
}

TEST_CASE("multi-utility greedy terminates at once when everything is covered") {
  // Quota zero on every element function.
  UtilityModel zero([](const PartialRealization&) { return Rational(0); },
                    Rational(0), Rational(1));
  auto dist = std::make_shared<ScenarioDistribution>(
      ScenarioDistribution::from_rows({0}, {{0}}, {Rational(1)}));
  const Policy policy = multi_greedy_policy({zero, zero}, dist, ItemSet::unit(1));
  CHECK_FALSE(policy.decide(PartialRealization{}).has_value());
}

TEST_CASE("multi-utility greedy rejects mismatched quotas") {
  UtilityModel a([](const PartialRealization&) { return Rational(0); },
                 Rational(1), Rational(1));
  UtilityModel b([](const PartialRealization&) { return Rational(0); },
                 Rational(2), Rational(1));
  auto dist = std::make_shared<ScenarioDistribution>(
      ScenarioDistribution::from_rows({0}, {{0}}, {Rational(1)}));
  CHECK_THROWS_AS(multi_greedy_policy({a, b}, dist, ItemSet::unit(1)),
                  MismatchedQuota);
}

TEST_CASE("summing utilities adds values and quotas") {
  const MultiInstance inst = build_minsum_setcover(
      {{0, 1}, {2}, {1, 2}}, {Rational(1), Rational(1), Rational(1)});
  const UtilityModel g = sum_functions(inst.utilities);
  CHECK(g.quota() == Rational(3));
  CHECK(g.value(PartialRealization{}) == Rational(0));
  CHECK(g.value(PartialRealization{{0, 0}}) == Rational(2));

  // Greedy on the summed function is the classic set-cover greedy.
  const Policy policy = greedy_policy(g, inst.distribution, inst.items);
  const UtilityModel fs[] = {g};
  const auto scen = as_scenarios(inst.distribution, inst.items.size());
  const ExecutionTrace trace =
      run_policy(policy, scen->scenario(0), inst.items, fs);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].item == 0);
  CHECK(trace.steps[1].item == 1);

  const UtilityModel doubled = sum_functions({inst.utilities[0], inst.utilities[0]});
  CHECK(doubled.quota() == Rational(2));
  CHECK(doubled.value(PartialRealization{{0, 0}}) == Rational(2));

  UtilityModel other([](const PartialRealization&) { return Rational(0); },
                     Rational(5), Rational(1));
  CHECK_THROWS_AS(sum_functions({inst.utilities[0], other}), MismatchedQuota);
}

TEST_CASE("item sets validate costs") {
  CHECK_THROWS_AS(ItemSet({Rational(0)}), Error);
  CHECK_THROWS_AS(ItemSet({Rational(-1)}), Error);
  const ItemSet items({Rational(1), Rational(3, 2)});
  CHECK(items.size() == 2);
  CHECK(items.total_cost() == Rational(5, 2));
  CHECK_FALSE(items.integral_costs());
  CHECK(ItemSet::unit(3).integral_costs());
}

TEST_CASE("granularity forces exact coverage near the quota") {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const AscInstance inst = build_odt(support::random_odt(rng, 6, 5));
    const auto scen = as_scenarios(inst.distribution, inst.items.size());
    for (int i = 0; i < scen->scenario_count(); ++i) {
      const PartialRealization phi = scen->scenario(i);
      PartialRealization psi;
      for (const auto& [item, outcome] : phi.pairs()) {
        const Rational value = inst.utility.value(psi);
        if (value > inst.utility.quota() - inst.utility.granularity()) {
          CHECK(value == inst.utility.quota());
        }
        psi = psi.with(item, outcome);
      }
    }
    CHECK(inst.utility.value(PartialRealization{}) == Rational(0));
  }
}

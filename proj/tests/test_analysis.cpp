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

#include <cmath>
#include <random>
#include <sstream>

#include "ascover/analysis.hpp"
#include "ascover/bounds.hpp"
#include "ascover/errors.hpp"
#include "ascover/greedy.hpp"
#include "ascover/minsum.hpp"
#include "ascover/odt.hpp"
#include "ascover/ssc.hpp"
#include "ascover/submodularity.hpp"

#include "support/test_support.hpp"

using namespace ascover;
using support::uniform_int;

namespace {

// Trace with the given utility values after 0, 1, ... steps; unit steps.
ExecutionTrace synthetic_trace(const std::vector<Rational>& values) {
  ExecutionTrace trace;
  for (std::size_t s = 0; s + 1 < values.size(); ++s) {
    trace.steps.push_back(TraceStep{static_cast<ItemId>(s), 0,
                                    Rational(static_cast<long>(s)),
                                    Rational(static_cast<long>(s + 1))});
  }
  trace.terminal_cost = Rational(static_cast<long>(values.size() - 1));
  return trace;
}

// Utility reading off the synthetic value ladder by |psi|.
UtilityModel ladder_utility(std::vector<Rational> values, Rational quota) {
  return UtilityModel(
      [values](const PartialRealization& psi) {
        return values.at(psi.pairs().size());
      },
      std::move(quota), Rational(1));
}

}  // namespace

TEST_CASE("cost laws merge duplicate atoms and validate weights") {
  const CostDistribution law({{Rational(2), Rational(1, 4)},
                              {Rational(1), Rational(1, 2)},
                              {Rational(2), Rational(1, 4)}});
  REQUIRE(law.atoms().size() == 2);
  CHECK(law.atoms()[0].first == Rational(1));
  CHECK(law.atoms()[1].second == Rational(1, 2));

  CHECK_THROWS_AS(CostDistribution({{Rational(1), Rational(1, 2)}}), Error);
  CHECK_THROWS_AS(CostDistribution({{Rational(-1), Rational(1)}}), Error);
  CHECK_THROWS_AS(
      CostDistribution({{Rational(1), Rational(3, 2)},
                        {Rational(2), Rational(-1, 2)}}),
      Error);
}

TEST_CASE("moments from the definition") {
  const CostDistribution law({{Rational(1), Rational(1, 100)},
                              {Rational(2), Rational(99, 100)}});
  CHECK(moment_direct(law, 1) == Rational(199, 100));

  const CostDistribution spiky({{Rational(1), Rational(99, 100)},
                                {Rational(100), Rational(1, 100)}});
  CHECK(moment_direct(spiky, 1) == Rational(199, 100));
  CHECK(moment_direct(spiky, 2) == Rational(99, 100) + Rational(100));

  const CostDistribution point({{Rational(7, 2), Rational(1)}});
  CHECK(moment_direct(point, 3) == Rational(343, 8));
  CHECK_THROWS_AS(moment_direct(point, 0), Error);
}

TEST_CASE("tail curves step down at the atoms") {
  const CostDistribution law({{Rational(1), Rational(1, 3)},
                              {Rational(2), Rational(2, 3)}});
  const StepCurve tail = tail_curve(law);
  CHECK(tail.value_at(Rational(0)) == Rational(1));
  CHECK(tail.value_at(Rational(1, 2)) == Rational(1));
  CHECK(tail.value_at(Rational(1)) == Rational(2, 3));
  CHECK(tail.value_at(Rational(3, 2)) == Rational(2, 3));
  CHECK(tail.value_at(Rational(2)) == Rational(0));
  CHECK(tail.value_at(Rational(100)) == Rational(0));
}

TEST_CASE("a staircase tail reproduces its mass profile") {
  const CostDistribution law({{Rational(1), Rational(3, 10)},
                              {Rational(2), Rational(1, 10)},
                              {Rational(16, 5), Rational(3, 10)},
                              {Rational(13, 2), Rational(1, 5)},
                              {Rational(8), Rational(1, 10)}});
  const StepCurve tail = tail_curve(law);
  CHECK(tail.value_at(Rational(1)) == Rational(7, 10));
  CHECK(tail.value_at(Rational(2)) == Rational(3, 5));
  CHECK(tail.value_at(Rational(16, 5)) == Rational(3, 10));
  CHECK(tail.value_at(Rational(13, 2)) == Rational(1, 10));
  CHECK(tail.value_at(Rational(8)) == Rational(0));
}

TEST_CASE("the moment identity holds exactly") {
  const CostDistribution law({{Rational(1), Rational(3, 10)},
                              {Rational(2), Rational(7, 10)}});
  const StepCurve tail = tail_curve(law);
  CHECK(moment_integral(tail, 1) == Rational(17, 10));
  CHECK(moment_integral(tail, 2) == Rational(31, 10));

  const CostDistribution point({{Rational(5, 3), Rational(1)}});
  CHECK(moment_integral(tail_curve(point), 2) == Rational(25, 9));

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const CostDistribution random = support::random_cost_law(rng, 8);
    const StepCurve curve = tail_curve(random);
    for (int p = 1; p <= 4; ++p) {
      CHECK(moment_integral(curve, p) == moment_direct(random, p));
    }
  }
}

TEST_CASE("completion curves follow the policy") {
  const AscInstance inst =
      build_odt({{1, 0}, {0, 1}, {0, 0}}, {Rational(1), Rational(1)}, true);
  const Policy policy =
      greedy_policy(inst.utility, inst.distribution, inst.items);
  const auto scen = as_scenarios(inst.distribution, inst.items.size());
  const StepCurve curve =
      completion_curve(policy, *scen, inst.items, inst.utility);
  CHECK(curve.value_at(Rational(0)) == Rational(1));
  CHECK(curve.value_at(Rational(1, 2)) == Rational(1));
  CHECK(curve.value_at(Rational(1)) == Rational(2, 3));
  CHECK(curve.value_at(Rational(2)) == Rational(0));

  // Its integral is the expected cover time.
  CHECK(moment_integral(curve, 1) == Rational(5, 3));
}

TEST_CASE("a zero quota yields the zero completion curve") {
  const AscInstance covered = build_odt({{1}, {0}}, {Rational(1)}, true);
  UtilityModel zero([](const PartialRealization&) { return Rational(0); },
                    Rational(0), Rational(1));
  const Policy policy = greedy_policy(zero, covered.distribution, covered.items);
  const auto scen = as_scenarios(covered.distribution, covered.items.size());
  const StepCurve curve =
      completion_curve(policy, *scen, covered.items, zero);
  CHECK(curve.value_at(Rational(0)) == Rational(0));
  CHECK(moment_integral(curve, 1) == Rational(0));
}

TEST_CASE("progress scores add harmonic mass per step") {
  const UtilityModel whole = ladder_utility({Rational(0), Rational(10)},
                                            Rational(10));
  CHECK(score_trace(synthetic_trace({Rational(0), Rational(10)}), whole) ==
        Rational(1));

  const UtilityModel halves = ladder_utility(
      {Rational(0), Rational(5), Rational(10)}, Rational(10));
  CHECK(score_trace(synthetic_trace({Rational(0), Rational(5), Rational(10)}),
                    halves) == Rational(3, 2));
}

TEST_CASE("the worked five-step score") {
  const std::vector<Rational> values = {Rational(0),     Rational(2),
                                        Rational(7, 2),  Rational(7),
                                        Rational(17, 2), Rational(10)};
  const UtilityModel f = ladder_utility(values, Rational(10));
  const Rational score = score_trace(synthetic_trace(values), f);
  // 2/10 + 3/16 + 7/13 + 3/10 / ... summed exactly:
  CHECK(score == Rational(2523, 1040));
  CHECK(to_double(score) <= trace_score_limit(f));
}

TEST_CASE("scoring rejects steps taken after coverage") {
  const std::vector<Rational> values = {Rational(0), Rational(10),
                                        Rational(10)};
  const UtilityModel f = ladder_utility(values, Rational(10));
  CHECK_THROWS_AS(score_trace(synthetic_trace(values), f), InvalidTrace);
}

TEST_CASE("greedy scores never exceed the harmonic ceiling") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    const AscInstance inst = build_odt(support::random_odt(rng, 8, 6, false));
    const Policy policy =
        greedy_policy(inst.utility, inst.distribution, inst.items);
    const UtilityModel fs[] = {inst.utility};
    const auto scen = as_scenarios(inst.distribution, inst.items.size());
    const double limit = trace_score_limit(inst.utility);
    for (const ExecutionTrace& trace :
         support::run_on_support(policy, *scen, inst.items, fs)) {
      CHECK(to_double(score_trace(trace, inst.utility)) <= limit + 1e-12);
    }
  }
}

TEST_CASE("the score ceiling is one plus the log of quota over granularity") {
  const UtilityModel f = ladder_utility({Rational(0), Rational(10)},
                                        Rational(10));
  CHECK(trace_score_limit(f) == doctest::Approx(1 + std::log(10.0)));
}

TEST_CASE("identification lower bounds at the worked sizes") {
  CHECK(entropy_bound(405) == doctest::Approx(3508.02).epsilon(1e-5));
  CHECK(entropy_bound(207) == doctest::Approx(1592.55).epsilon(1e-5));
  CHECK(entropy_bound(1) == 0.0);

  CHECK(huffman_bound(405, 1) == Rational(3538));
  CHECK(huffman_bound(395, 1) == Rational(3438));
  CHECK(huffman_bound(3, 2) == Rational(9));
  CHECK(huffman_bound(3, 1, false) == Rational(5, 3));
  CHECK(huffman_bound(1, 1) == Rational(0));
  CHECK(huffman_bound(2, 3) == Rational(2));
}

TEST_CASE("the balanced-tree bound is the true minimum over leaf depths") {
  for (int m = 1; m <= 8; ++m) {
    for (int p = 1; p <= 3; ++p) {
      CHECK(huffman_bound(m, p) ==
            Rational(static_cast<long>(support::min_depth_power_sum(m, p))));
    }
  }
}

TEST_CASE("diminishing returns holds on identification instances") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const AscInstance inst = build_odt(support::random_odt(rng, 5, 4));
    const SubmodularityReport report = check_adaptive_submodular(
        inst.utility, *inst.distribution, 200, 99);
    CHECK(report.exhaustive);
    CHECK(report.passed());
    CHECK(report.triples_checked > 0);
  }
}

TEST_CASE("diminishing returns holds on stochastic coverage instances") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 10; ++trial) {
    const AscInstance inst = build_ssc(support::random_ssc_data(rng, 4, 4));
    const SubmodularityReport report = check_adaptive_submodular(
        inst.utility, *inst.distribution, 200, 99);
    CHECK(report.exhaustive);
    CHECK(report.passed());
  }
}

TEST_CASE("a utility rewarding late information is caught") {
  // f pays out only for a positive second item: knowing the first item's
  // outcome concentrates the posterior and *raises* item 1's benefit.
  auto dist = std::make_shared<ScenarioDistribution>(
      ScenarioDistribution::from_rows(
          {0, 1}, {{1, 1}, {0, 0}}, {Rational(1, 2), Rational(1, 2)}));
  UtilityModel f(
      [](const PartialRealization& psi) {
        const auto w = psi.outcome_of(1);
        return Rational(w && *w == 1 ? 1 : 0);
      },
      Rational(1), Rational(1));
  const SubmodularityReport report =
      check_adaptive_submodular(f, *dist, 100, 3);
  CHECK_FALSE(report.passed());
  REQUIRE(!report.violations.empty());
  const SubmodularityViolation& v = report.violations.front();
  CHECK(v.benefit_at_prime > v.benefit_at_psi);
  CHECK(is_subrealization(v.psi, v.psi_prime));
}

TEST_CASE("large supports fall back to sampled checking") {
  std::mt19937_64 rng(55);
  const AscInstance inst =
      build_odt(support::random_matrix(rng, 12, 9),
                std::vector<Rational>(9, Rational(1)), true);
  const SubmodularityReport report = check_adaptive_submodular(
      inst.utility, *inst.distribution, 50, 7, /*exhaustive_cap=*/64);
  CHECK_FALSE(report.exhaustive);
  CHECK(report.passed());
  CHECK(report.triples_checked > 0);
}

TEST_CASE("cover-time sums generalize the terminal moment") {
  const MultiInstance inst = build_minsum_setcover(
      {{0, 1}, {2}, {1, 2}}, {Rational(1), Rational(1), Rational(1)});
  const Policy policy =
      multi_greedy_policy(inst.utilities, inst.distribution, inst.items);
  const auto scen = as_scenarios(inst.distribution, inst.items.size());
  CHECK(multi_cover_objective(policy, *scen, inst.items, inst.utilities, 1) ==
        Rational(4));
  CHECK(multi_cover_objective(policy, *scen, inst.items, inst.utilities, 2) ==
        Rational(6));

  // With a single utility the objective is the cover-time moment, which for
  // identification equals the terminal-cost moment.
  std::mt19937_64 rng(56);
  const AscInstance single = build_odt(support::random_odt(rng, 6, 5));
  const Policy p =
      greedy_policy(single.utility, single.distribution, single.items);
  const UtilityModel fs[] = {single.utility};
  const auto sscen = as_scenarios(single.distribution, single.items.size());
  const PolicyCostLaws laws = cost_distribution(p, *sscen, single.items, fs);
  CHECK(multi_cover_objective(p, *sscen, single.items, fs, 2) ==
        moment_direct(laws.terminal, 2));
}

TEST_CASE("curves export as two-column CSV") {
  const StepCurve curve({{Rational(0), Rational(1)},
                         {Rational(3, 2), Rational(1, 3)},
                         {Rational(2), Rational(0)}});
  std::ostringstream out;
  save_curve_csv(out, curve);
  CHECK(out.str() == "t,value\n0,1\n1.5,0.333333\n2,0\n");
}

TEST_CASE("tail curves are non-increasing with rational breakpoints") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 30; ++trial) {
    const CostDistribution law = support::random_cost_law(rng, 6);
    const StepCurve tail = tail_curve(law);
    const auto& points = tail.breakpoints();
    REQUIRE(!points.empty());
    CHECK(points.front().first == Rational(0));
    CHECK(points.back().second == Rational(0));
    for (std::size_t i = 1; i < points.size(); ++i) {
      CHECK(points[i].first > points[i - 1].first);
      CHECK(points[i].second < points[i - 1].second);
    }
  }
}

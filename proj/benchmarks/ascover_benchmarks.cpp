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

#include <benchmark/benchmark.h>

#include <random>

#include "ascover/analysis.hpp"
#include "ascover/bench.hpp"
#include "ascover/bounds.hpp"
#include "ascover/greedy.hpp"
#include "ascover/odt.hpp"
#include "ascover/oracle.hpp"
#include "ascover/viral.hpp"

namespace {

using namespace ascover;

AscInstance generated_instance(int m0, int n) {
  WiserLikeParams params;
  params.m0 = m0;
  params.n = n;
  params.seed = 7;
  return build_odt(generate_wiser_like(params));
}

void BM_GreedyIdentification(benchmark::State& state) {
  const AscInstance inst = generated_instance(static_cast<int>(state.range(0)),
                                              static_cast<int>(state.range(1)));
  const UtilityModel fs[] = {inst.utility};
  const auto scen = as_scenarios(inst.distribution, inst.items.size());
  for (auto _ : state) {
    const Policy policy =
        greedy_policy(inst.utility, inst.distribution, inst.items);
    const PolicyCostLaws laws =
        cost_distribution(policy, *scen, inst.items, fs);
    benchmark::DoNotOptimize(laws.terminal.atoms().size());
  }
}
BENCHMARK(BM_GreedyIdentification)
    ->Args({64, 24})
    ->Args({128, 40})
    ->Args({415, 79})
    ->Unit(benchmark::kMillisecond);

void BM_PosteriorQueries(benchmark::State& state) {
  const AscInstance inst = generated_instance(128, 40);
  const auto scen = as_scenarios(inst.distribution, inst.items.size());
  const PartialRealization psi = scen->scenario(0);
  // Query prefixes of one scenario, deepest last.
  std::vector<PartialRealization> prefixes;
  PartialRealization prefix;
  for (const auto& [item, outcome] : psi.pairs()) {
    prefixes.push_back(prefix);
    prefix = prefix.with(item, outcome);
    if (prefixes.size() == 12) break;
  }
  for (auto _ : state) {
    Rational total(0);
    for (const PartialRealization& p : prefixes) {
      total += scen->posterior_weight(p);
    }
    benchmark::DoNotOptimize(total.get_d());
  }
}
BENCHMARK(BM_PosteriorQueries);

void BM_MarginalBenefit(benchmark::State& state) {
  const AscInstance inst = generated_instance(128, 40);
  for (auto _ : state) {
    Rational total(0);
    for (ItemId item = 0; item < inst.items.size(); ++item) {
      total += marginal_benefit(inst.utility, *inst.distribution,
                                PartialRealization{}, item);
    }
    benchmark::DoNotOptimize(total.get_d());
  }
}
BENCHMARK(BM_MarginalBenefit);

void BM_TreeBound(benchmark::State& state) {
  for (auto _ : state) {
    for (long m = 2; m <= 4096; m *= 2) {
      benchmark::DoNotOptimize(huffman_bound(m + 1, 3));
    }
  }
}
BENCHMARK(BM_TreeBound);

void BM_MomentIntegral(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::vector<std::pair<Rational, Rational>> atoms;
  const int count = 512;
  for (int i = 0; i < count; ++i) {
    atoms.push_back({Rational(i), Rational(1, count)});
  }
  const CostDistribution law(atoms);
  const StepCurve tail = tail_curve(law);
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment_integral(tail, 3).get_d());
  }
}
BENCHMARK(BM_MomentIntegral);

void BM_OracleExpectedCost(benchmark::State& state) {
  std::mt19937_64 rng(9);
  std::vector<std::vector<Outcome>> matrix(8, std::vector<Outcome>(6));
  for (auto& row : matrix) {
    for (Outcome& cell : row) cell = static_cast<Outcome>(rng() % 2);
  }
  const AscInstance inst =
      build_odt(matrix, std::vector<Rational>(6, Rational(1)), true);
  const auto scen = as_scenarios(inst.distribution, inst.items.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        optimal_expected_cost(inst.utility, *scen, inst.items).value.get_d());
  }
}
BENCHMARK(BM_OracleExpectedCost);

void BM_CascadeExact(benchmark::State& state) {
  std::vector<Rational> costs(10, Rational(1));
  std::vector<CascadeArc> arcs;
  for (int v = 0; v + 1 < 10; ++v) {
    arcs.push_back({v, v + 1, Rational(1, 3)});
  }
  const CascadeNetwork net(costs, arcs);
  for (auto _ : state) {
    const ViralInstance viral = build_viral(net, 3, ViralMode::exact());
    benchmark::DoNotOptimize(viral.outcomes.size());
  }
}
BENCHMARK(BM_CascadeExact);

}  // namespace

BENCHMARK_MAIN();

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

#include "ascover/submodularity.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ascover/greedy.hpp"

namespace ascover {

namespace {

// Benefits are recomputed for many (psi, item) pairs; cache them.
class BenefitCache {
 public:
  BenefitCache(const UtilityModel& f, const Distribution& dist)
      : f_(f), dist_(dist) {}

  const Rational& benefit(const PartialRealization& psi, ItemId item) {
    auto [it, inserted] = cache_.try_emplace({psi, item});
    if (inserted) it->second = marginal_benefit(f_, dist_, psi, item);
    return it->second;
  }

 private:
  const UtilityModel& f_;
  const Distribution& dist_;
  std::map<std::pair<PartialRealization, ItemId>, Rational> cache_;
};

}  // namespace

SubmodularityReport check_adaptive_submodular(const UtilityModel& f,
                                              const Distribution& dist,
                                              int trials, std::uint64_t seed,
                                              std::int64_t exhaustive_cap) {
  SubmodularityReport report;
  const int n = dist.item_count();

  // Exhaustive when every positive-probability history fits in the cap:
  // |scenarios| * 2^n bounds the number of reachable histories.
  std::shared_ptr<const ScenarioDistribution> scenarios;
  if (auto* explicit_dist = dynamic_cast<const ScenarioDistribution*>(&dist)) {
    scenarios = std::shared_ptr<const ScenarioDistribution>(
        std::shared_ptr<void>(), explicit_dist);
  } else if (auto* product =
                 dynamic_cast<const ProductDistribution*>(&dist)) {
    try {
      std::vector<ItemId> items(n);
      std::iota(items.begin(), items.end(), 0);
      scenarios = std::make_shared<ScenarioDistribution>(
          product_to_scenarios(*product, items, exhaustive_cap));
    } catch (const EnumerationTooLarge&) {
      scenarios = nullptr;
    }
  }
  const bool exhaustive =
      scenarios && n < 63 &&
      scenarios->scenario_count() <= exhaustive_cap >> std::min(n, 62);

  BenefitCache benefits(f, dist);
  auto record = [&](const PartialRealization& psi,
                    const PartialRealization& psi_prime, ItemId item) {
    ++report.triples_checked;
    const Rational& at_psi = benefits.benefit(psi, item);
    const Rational& at_prime = benefits.benefit(psi_prime, item);
    if (at_psi < at_prime) {
      report.violations.push_back(
          {psi, psi_prime, item, at_psi, at_prime});
    }
  };

  if (exhaustive) {
    report.exhaustive = true;
    // Distinct positive-probability histories: every restriction of every
    // scenario.
    std::set<PartialRealization> histories;
    for (int i = 0; i < scenarios->scenario_count(); ++i) {
      const PartialRealization phi = scenarios->scenario(i);
      const auto& pairs = phi.pairs();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
           ++mask) {
        std::vector<std::pair<ItemId, Outcome>> subset;
        for (std::size_t j = 0; j < pairs.size(); ++j) {
          if ((mask >> j) & 1) subset.push_back(pairs[j]);
        }
        histories.insert(
            PartialRealization::from_sorted_pairs(std::move(subset)));
      }
    }
    // Every sub-history psi of a history psi' is itself positive-
    // probability, so enumerating subset masks of psi' covers all pairs.
    for (const PartialRealization& psi_prime : histories) {
      const auto& pairs = psi_prime.pairs();
      for (std::uint64_t mask = 0;
           mask + 1 < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<ItemId, Outcome>> subset;
        for (std::size_t j = 0; j < pairs.size(); ++j) {
          if ((mask >> j) & 1) subset.push_back(pairs[j]);
        }
        const PartialRealization psi =
            PartialRealization::from_sorted_pairs(std::move(subset));
        for (ItemId item = 0; item < n; ++item) {
          if (psi_prime.contains(item)) continue;
          record(psi, psi_prime, item);
        }
      }
    }
    return report;
  }

  // Sampled: random prefix walks down sampled realizations give positive-
  // probability nested pairs.
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const PartialRealization phi = dist.sample(rng());
    std::vector<std::pair<ItemId, Outcome>> order(phi.pairs());
    std::shuffle(order.begin(), order.end(), rng);
    if (order.empty()) continue;
    const std::size_t longer =
        std::uniform_int_distribution<std::size_t>(0, order.size() - 1)(rng);
    const std::size_t shorter =
        std::uniform_int_distribution<std::size_t>(0, longer)(rng);

    auto prefix = [&](std::size_t size) {
      std::vector<std::pair<ItemId, Outcome>> pairs(order.begin(),
                                                    order.begin() + size);
      std::sort(pairs.begin(), pairs.end());
      return PartialRealization::from_sorted_pairs(std::move(pairs));
    };
    const PartialRealization psi_prime = prefix(longer);
    const PartialRealization psi = prefix(shorter);

    std::vector<ItemId> outside;
    for (ItemId item = 0; item < n; ++item) {
      if (!psi_prime.contains(item)) outside.push_back(item);
    }
    if (outside.empty()) continue;
    const ItemId item = outside[std::uniform_int_distribution<std::size_t>(
        0, outside.size() - 1)(rng)];
    record(psi, psi_prime, item);
  }
  return report;
}

}  // namespace ascover

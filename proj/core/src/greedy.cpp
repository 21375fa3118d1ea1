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

#include "ascover/greedy.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "ascover/errors.hpp"

namespace ascover {

Rational marginal_benefit(const UtilityModel& f, const Distribution& dist,
                          const PartialRealization& psi, ItemId item) {
  const OutcomePosterior posterior = dist.outcome_posterior(psi, item);
  const Rational base = f.value(psi);
  Rational benefit(0);
  for (const auto& [outcome, probability] : posterior) {
    benefit += probability * (f.value(psi.with(item, outcome)) - base);
  }
  return benefit;
}

ItemId greedy_step(const UtilityModel& f, const Distribution& dist,
                   const ItemSet& items, const PartialRealization& psi,
                   std::span<const ItemId> remaining) {
  if (remaining.empty()) {
    throw CoverabilityViolation(
        "no items remain while the utility is below quota");
  }

  std::vector<ItemId> candidates(remaining.begin(), remaining.end());
  std::sort(candidates.begin(), candidates.end());

  std::optional<ItemId> best;
  Rational best_ratio(0);
  for (ItemId item : candidates) {
    const Rational benefit = marginal_benefit(f, dist, psi, item);
    if (benefit <= 0) continue;
    Rational ratio = benefit / items.cost(item);
    // Strict improvement only: equal ratios keep the earlier (smaller) id.
    if (!best || ratio > best_ratio) {
      best = item;
      best_ratio = std::move(ratio);
    }
  }
  if (!best) {
    throw CoverabilityViolation(
        "no remaining item has positive marginal benefit below quota");
  }
  return *best;
}

namespace {

std::vector<ItemId> unobserved_items(int item_count,
                                     const PartialRealization& psi) {
  std::vector<ItemId> remaining;
  remaining.reserve(item_count);
  for (ItemId item = 0; item < item_count; ++item) {
    if (!psi.contains(item)) remaining.push_back(item);
  }
  return remaining;
}

}  // namespace

Policy greedy_policy(UtilityModel f, std::shared_ptr<const Distribution> dist,
                     ItemSet items) {
  if (!dist) throw Error("greedy policy without a distribution");
  return Policy(
      Policy::Kind::greedy,
      [f = std::move(f), dist = std::move(dist), items = std::move(items)](
          const PartialRealization& psi) -> std::optional<ItemId> {
        if (f.covered(psi)) return std::nullopt;
        return greedy_step(f, *dist, items, psi,
                           unobserved_items(items.size(), psi));
      });
}

Policy multi_greedy_policy(std::vector<UtilityModel> fs,
                           std::shared_ptr<const Distribution> dist,
                           ItemSet items) {
  if (!dist) throw Error("greedy policy without a distribution");
  if (fs.empty()) throw Error("greedy policy without utilities");
  const Rational quota = fs.front().quota();
  for (const UtilityModel& f : fs) {
    if (f.quota() != quota) {
      throw MismatchedQuota("multi greedy requires one shared quota");
    }
  }

  auto decide = [fs = std::move(fs), dist = std::move(dist),
                 items = std::move(items),
                 quota](const PartialRealization& psi)
      -> std::optional<ItemId> {
    // Current values; functions at quota drop out of the score.
    std::vector<Rational> values;
    values.reserve(fs.size());
    std::vector<std::size_t> open;
    for (std::size_t r = 0; r < fs.size(); ++r) {
      values.push_back(fs[r].value(psi));
      if (!fs[r].covered_value(values.back())) open.push_back(r);
    }
    if (open.empty()) return std::nullopt;

    std::optional<ItemId> best;
    Rational best_score(0);
    for (ItemId item = 0; item < items.size(); ++item) {
      if (psi.contains(item)) continue;
      const OutcomePosterior posterior = dist->outcome_posterior(psi, item);
      // Expected progress of each open function, weighted by how close it
      // already is to its quota.
      Rational score(0);
      for (const auto& [outcome, probability] : posterior) {
        const PartialRealization extended = psi.with(item, outcome);
        for (std::size_t r : open) {
          score += probability * (fs[r].value(extended) - values[r]) /
                   (quota - values[r]);
        }
      }
      if (score <= 0) continue;
      score /= items.cost(item);
      if (!best || score > best_score) {
        best = item;
        best_score = std::move(score);
      }
    }
    if (!best) {
      throw CoverabilityViolation(
          "no item advances any uncovered utility below quota");
    }
    return best;
  };
  return Policy(Policy::Kind::multi_greedy, std::move(decide));
}

}  // namespace ascover

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

#ifndef ASCOVER_DISTRIBUTION_HPP_
#define ASCOVER_DISTRIBUTION_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "ascover/errors.hpp"
#include "ascover/items.hpp"
#include "ascover/partial_realization.hpp"
#include "ascover/rational.hpp"

namespace ascover {

struct OutcomeWeight {
  Outcome outcome;
  Rational probability;  // strictly positive
};

// Posterior of one item's outcome given the observations so far; entries in
// ascending outcome order, probabilities summing to one exactly.
using OutcomePosterior = std::vector<OutcomeWeight>;

// Prior over full realizations.  Posterior queries are exact rational
// arithmetic, so downstream argmax decisions never see rounding.
class Distribution {
 public:
  virtual ~Distribution() = default;

  virtual int item_count() const = 0;
  virtual int outcome_count() const = 0;

  // Pr[psi is a sub-history of the true realization].  Zero is a valid
  // answer, never an error.
  virtual Rational posterior_weight(const PartialRealization& psi) const = 0;

  // Distribution of item's outcome given psi.  Throws
  // ZeroProbabilityRealization when psi has zero weight and
  // ItemAlreadyObserved when item is in dom(psi).
  virtual OutcomePosterior outcome_posterior(const PartialRealization& psi,
                                             ItemId item) const = 0;

  // Draws one full realization, deterministic in seed.
  virtual PartialRealization sample(std::uint64_t seed) const = 0;
};

// Explicit list of full realizations with positive rational weights.
// Construction normalizes weights to sum one and merges duplicate
// realizations by summing their weights.  A Monte-Carlo empirical
// distribution (N draws, weight 1/N each, merged) is an ordinary
// ScenarioDistribution; guarantees computed from it are exact with respect
// to the empirical prior.
class ScenarioDistribution final : public Distribution {
 public:
  ScenarioDistribution(std::vector<PartialRealization> scenarios,
                       std::vector<Rational> weights);

  // Cheaper path for builders holding dense outcome rows over a fixed item
  // domain (ascending ids).  rows[i][j] is scenario i's outcome on
  // domain[j].
  static ScenarioDistribution from_rows(std::vector<ItemId> domain,
                                        std::vector<std::vector<Outcome>> rows,
                                        std::vector<Rational> weights);

  int item_count() const override;
  int outcome_count() const override { return outcome_count_; }
  Rational posterior_weight(const PartialRealization& psi) const override;
  OutcomePosterior outcome_posterior(const PartialRealization& psi,
                                     ItemId item) const override;
  PartialRealization sample(std::uint64_t seed) const override;

  int scenario_count() const { return static_cast<int>(rows_.size()); }
  const Rational& weight(int scenario) const { return weights_[scenario]; }
  PartialRealization scenario(int scenario) const;
  Outcome scenario_outcome(int scenario, ItemId item) const;
  const std::vector<ItemId>& item_domain() const { return domain_; }

  // Indices of scenarios consistent with psi, ascending.
  std::vector<int> consistent_scenarios(const PartialRealization& psi) const;

 private:
  ScenarioDistribution() = default;
  void normalize_and_merge();

  std::vector<ItemId> domain_;                // ascending item ids
  std::vector<std::vector<Outcome>> rows_;    // dense outcomes per scenario
  std::vector<Rational> weights_;
  int outcome_count_ = 0;
};

// Reweights the scenarios consistent with psi to sum one.  Throws
// ZeroProbabilityRealization when none are.
ScenarioDistribution condition(const ScenarioDistribution& dist,
                               const PartialRealization& psi);

// Independent items: one marginal probability vector over outcomes per item.
class ProductDistribution final : public Distribution {
 public:
  explicit ProductDistribution(std::vector<std::vector<Rational>> marginals);

  int item_count() const override {
    return static_cast<int>(marginals_.size());
  }
  int outcome_count() const override { return outcome_count_; }
  Rational posterior_weight(const PartialRealization& psi) const override;
  OutcomePosterior outcome_posterior(const PartialRealization& psi,
                                     ItemId item) const override;
  PartialRealization sample(std::uint64_t seed) const override;

  const std::vector<Rational>& marginal(ItemId item) const;

 private:
  std::vector<std::vector<Rational>> marginals_;
  int outcome_count_ = 0;
};

// Expands the product over the given items into an explicit scenario set,
// dropping zero-weight outcome combinations.  Throws EnumerationTooLarge
// when the scenario count would exceed cap.
ScenarioDistribution product_to_scenarios(const ProductDistribution& dist,
                                          std::span<const ItemId> items,
                                          std::int64_t cap = 1000000);

// File format: one record per scenario,
//   weight_num weight_den item:outcome item:outcome ...
// whitespace separated, items ascending, '#' starts a comment.
ScenarioDistribution load_scenarios(std::istream& in);
void save_scenarios(std::ostream& out, const ScenarioDistribution& dist);

// File format: one line per item listing outcome probabilities as rationals.
ProductDistribution load_product(std::istream& in);
void save_product(std::ostream& out, const ProductDistribution& dist);

}  // namespace ascover

#endif  // ASCOVER_DISTRIBUTION_HPP_

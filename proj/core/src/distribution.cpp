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

#include "ascover/distribution.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>

namespace ascover {

namespace {

// Exact threshold draw: picks the first index whose cumulative weight
// exceeds u/2^64 for a 64-bit u.  Deterministic in the generator state.
int pick_weighted(const std::vector<Rational>& weights, std::mt19937_64& rng) {
  const std::uint64_t raw = rng();
  Rational threshold(mpz_class(static_cast<unsigned long>(raw)),
                     mpz_class(1) << 64);
  threshold.canonicalize();
  Rational cumulative(0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    cumulative += weights[i];
    if (cumulative > threshold) return static_cast<int>(i);
  }
  return static_cast<int>(weights.size()) - 1;  // guards rounding at 1
}

bool row_consistent(const std::vector<ItemId>& domain,
                    const std::vector<Outcome>& row,
                    const PartialRealization& psi) {
  for (const auto& [item, outcome] : psi.pairs()) {
    auto it = std::lower_bound(domain.begin(), domain.end(), item);
    if (it == domain.end() || *it != item) return false;
    if (row[it - domain.begin()] != outcome) return false;
  }
  return true;
}

}  // namespace

ScenarioDistribution::ScenarioDistribution(
    std::vector<PartialRealization> scenarios, std::vector<Rational> weights) {
  if (scenarios.empty()) throw Error("scenario distribution without scenarios");
  if (scenarios.size() != weights.size()) {
    throw Error("scenario/weight count mismatch");
  }
  domain_ = scenarios.front().domain();
  rows_.reserve(scenarios.size());
  for (const PartialRealization& scenario : scenarios) {
    if (scenario.domain() != domain_) {
      throw Error("scenarios must share one item domain");
    }
    std::vector<Outcome> row;
    row.reserve(domain_.size());
    for (const auto& [item, outcome] : scenario.pairs()) {
      row.push_back(outcome);
    }
    rows_.push_back(std::move(row));
  }
  weights_ = std::move(weights);
  normalize_and_merge();
}

ScenarioDistribution ScenarioDistribution::from_rows(
    std::vector<ItemId> domain, std::vector<std::vector<Outcome>> rows,
    std::vector<Rational> weights) {
  if (rows.empty()) throw Error("scenario distribution without scenarios");
  if (rows.size() != weights.size()) {
    throw Error("scenario/weight count mismatch");
  }
  if (!std::is_sorted(domain.begin(), domain.end()) ||
      std::adjacent_find(domain.begin(), domain.end()) != domain.end()) {
    throw Error("scenario domain must be strictly ascending");
  }
  for (const auto& row : rows) {
    if (row.size() != domain.size()) {
      throw Error("scenario row width does not match the domain");
    }
  }
  ScenarioDistribution dist;
  dist.domain_ = std::move(domain);
  dist.rows_ = std::move(rows);
  dist.weights_ = std::move(weights);
  dist.normalize_and_merge();
  return dist;
}

void ScenarioDistribution::normalize_and_merge() {
  for (Rational& weight : weights_) {
    weight.canonicalize();
    if (weight <= 0) throw Error("scenario weights must be positive");
  }

  // Merge duplicate realizations (first occurrence keeps the slot).
  std::map<std::vector<Outcome>, std::size_t> first_index;
  std::vector<std::vector<Outcome>> merged_rows;
  std::vector<Rational> merged_weights;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto [it, inserted] = first_index.try_emplace(rows_[i], merged_rows.size());
    if (inserted) {
      merged_rows.push_back(std::move(rows_[i]));
      merged_weights.push_back(weights_[i]);
    } else {
      merged_weights[it->second] += weights_[i];
    }
  }
  rows_ = std::move(merged_rows);
  weights_ = std::move(merged_weights);

  Rational total(0);
  for (const Rational& weight : weights_) total += weight;
  for (Rational& weight : weights_) weight /= total;

  outcome_count_ = 1;
  for (const auto& row : rows_) {
    for (Outcome outcome : row) {
      if (outcome < 0) throw Error("negative outcome value");
      outcome_count_ = std::max(outcome_count_, outcome + 1);
    }
  }
}

int ScenarioDistribution::item_count() const {
  return static_cast<int>(domain_.size());
}

Rational ScenarioDistribution::posterior_weight(
    const PartialRealization& psi) const {
  Rational total(0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (row_consistent(domain_, rows_[i], psi)) total += weights_[i];
  }
  return total;
}

OutcomePosterior ScenarioDistribution::outcome_posterior(
    const PartialRealization& psi, ItemId item) const {
  if (psi.contains(item)) {
    throw ItemAlreadyObserved("posterior query for an observed item");
  }
  auto it = std::lower_bound(domain_.begin(), domain_.end(), item);
  if (it == domain_.end() || *it != item) {
    throw Error("item " + std::to_string(item) +
                " is not in the scenario domain");
  }
  const std::size_t column = it - domain_.begin();

  std::map<Outcome, Rational> buckets;
  Rational total(0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!row_consistent(domain_, rows_[i], psi)) continue;
    buckets[rows_[i][column]] += weights_[i];
    total += weights_[i];
  }
  if (total == 0) {
    throw ZeroProbabilityRealization(
        "posterior conditioned on a zero-probability realization");
  }
  OutcomePosterior posterior;
  posterior.reserve(buckets.size());
  for (auto& [outcome, weight] : buckets) {
    posterior.push_back({outcome, weight / total});
  }
  return posterior;
}

PartialRealization ScenarioDistribution::sample(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  return scenario(pick_weighted(weights_, rng));
}

PartialRealization ScenarioDistribution::scenario(int scenario) const {
  const auto& row = rows_[scenario];
  std::vector<std::pair<ItemId, Outcome>> pairs;
  pairs.reserve(domain_.size());
  for (std::size_t j = 0; j < domain_.size(); ++j) {
    pairs.emplace_back(domain_[j], row[j]);
  }
  return PartialRealization::from_sorted_pairs(std::move(pairs));
}

Outcome ScenarioDistribution::scenario_outcome(int scenario,
                                               ItemId item) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), item);
  if (it == domain_.end() || *it != item) {
    throw Error("item " + std::to_string(item) +
                " is not in the scenario domain");
  }
  return rows_[scenario][it - domain_.begin()];
}

std::vector<int> ScenarioDistribution::consistent_scenarios(
    const PartialRealization& psi) const {
  std::vector<int> indices;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (row_consistent(domain_, rows_[i], psi)) {
      indices.push_back(static_cast<int>(i));
    }
  }
  return indices;
}

ScenarioDistribution condition(const ScenarioDistribution& dist,
                               const PartialRealization& psi) {
  std::vector<int> keep = dist.consistent_scenarios(psi);
  if (keep.empty()) {
    throw ZeroProbabilityRealization(
        "conditioning on a zero-probability realization");
  }
  std::vector<std::vector<Outcome>> rows;
  std::vector<Rational> weights;
  rows.reserve(keep.size());
  weights.reserve(keep.size());
  for (int index : keep) {
    std::vector<Outcome> row;
    row.reserve(dist.item_domain().size());
    for (ItemId item : dist.item_domain()) {
      row.push_back(dist.scenario_outcome(index, item));
    }
    rows.push_back(std::move(row));
    weights.push_back(dist.weight(index));
  }
  return ScenarioDistribution::from_rows(dist.item_domain(), std::move(rows),
                                         std::move(weights));
}

ProductDistribution::ProductDistribution(
    std::vector<std::vector<Rational>> marginals)
    : marginals_(std::move(marginals)) {
  for (auto& marginal : marginals_) {
    if (marginal.empty()) throw Error("item with no outcomes");
    Rational total(0);
    for (Rational& prob : marginal) {
      prob.canonicalize();
      if (prob < 0) throw Error("negative outcome probability");
      total += prob;
    }
    if (total != 1) throw Error("item marginal does not sum to one");
    outcome_count_ =
        std::max(outcome_count_, static_cast<int>(marginal.size()));
  }
}

Rational ProductDistribution::posterior_weight(
    const PartialRealization& psi) const {
  Rational weight(1);
  for (const auto& [item, outcome] : psi.pairs()) {
    const auto& marginal = this->marginal(item);
    if (outcome < 0 || outcome >= static_cast<Outcome>(marginal.size())) {
      return Rational(0);
    }
    weight *= marginal[outcome];
  }
  return weight;
}

OutcomePosterior ProductDistribution::outcome_posterior(
    const PartialRealization& psi, ItemId item) const {
  if (psi.contains(item)) {
    throw ItemAlreadyObserved("posterior query for an observed item");
  }
  if (posterior_weight(psi) == 0) {
    throw ZeroProbabilityRealization(
        "posterior conditioned on a zero-probability realization");
  }
  // Independence: the history never shifts an unobserved item's marginal.
  OutcomePosterior posterior;
  const auto& marginal = this->marginal(item);
  for (std::size_t w = 0; w < marginal.size(); ++w) {
    if (marginal[w] > 0) {
      posterior.push_back({static_cast<Outcome>(w), marginal[w]});
    }
  }
  return posterior;
}

PartialRealization ProductDistribution::sample(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<ItemId, Outcome>> pairs;
  pairs.reserve(marginals_.size());
  for (std::size_t item = 0; item < marginals_.size(); ++item) {
    pairs.emplace_back(static_cast<ItemId>(item),
                       static_cast<Outcome>(pick_weighted(marginals_[item],
                                                          rng)));
  }
  return PartialRealization::from_sorted_pairs(std::move(pairs));
}

const std::vector<Rational>& ProductDistribution::marginal(ItemId item) const {
  if (item < 0 || item >= item_count()) {
    throw Error("item " + std::to_string(item) + " has no marginal");
  }
  return marginals_[item];
}

ScenarioDistribution product_to_scenarios(const ProductDistribution& dist,
                                          std::span<const ItemId> items,
                                          std::int64_t cap) {
  std::vector<ItemId> domain(items.begin(), items.end());
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());

  // Count reachable combinations (zero-probability outcomes dropped).
  std::vector<std::vector<Outcome>> supports;
  supports.reserve(domain.size());
  std::int64_t count = 1;
  for (ItemId item : domain) {
    const auto& marginal = dist.marginal(item);
    std::vector<Outcome> support;
    for (std::size_t w = 0; w < marginal.size(); ++w) {
      if (marginal[w] > 0) support.push_back(static_cast<Outcome>(w));
    }
    supports.push_back(std::move(support));
    if (count > cap / std::max<std::int64_t>(supports.back().size(), 1)) {
      throw EnumerationTooLarge("product expansion exceeds the cap");
    }
    count *= static_cast<std::int64_t>(supports.back().size());
  }
  if (count > cap) {
    throw EnumerationTooLarge("product expansion exceeds the cap");
  }

  std::vector<std::vector<Outcome>> rows;
  std::vector<Rational> weights;
  rows.reserve(count);
  weights.reserve(count);
  std::vector<Outcome> current(domain.size());

  // Lexicographic depth-first enumeration keeps the order deterministic.
  auto enumerate = [&](auto&& self, std::size_t depth,
                       const Rational& weight) -> void {
    if (depth == domain.size()) {
      rows.push_back(current);
      weights.push_back(weight);
      return;
    }
    const auto& marginal = dist.marginal(domain[depth]);
    for (Outcome outcome : supports[depth]) {
      current[depth] = outcome;
      self(self, depth + 1, Rational(weight * marginal[outcome]));
    }
  };
  enumerate(enumerate, 0, Rational(1));

  return ScenarioDistribution::from_rows(std::move(domain), std::move(rows),
                                         std::move(weights));
}

namespace {

// Strips comments, returns false for blank lines.
bool strip_line(std::string& line) {
  if (auto hash = line.find('#'); hash != std::string::npos) {
    line.erase(hash);
  }
  return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

}  // namespace

ScenarioDistribution load_scenarios(std::istream& in) {
  std::vector<PartialRealization> scenarios;
  std::vector<Rational> weights;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!strip_line(line)) continue;
    std::istringstream fields(line);
    std::string num, den;
    if (!(fields >> num >> den)) {
      throw ParseError("scenario line " + std::to_string(line_number) +
                       ": expected weight numerator and denominator");
    }
    Rational weight = parse_rational(num + "/" + den);
    std::vector<std::pair<ItemId, Outcome>> pairs;
    std::string token;
    while (fields >> token) {
      auto colon = token.find(':');
      if (colon == std::string::npos) {
        throw ParseError("scenario line " + std::to_string(line_number) +
                         ": expected item:outcome, got '" + token + "'");
      }
      try {
        pairs.emplace_back(std::stoi(token.substr(0, colon)),
                           std::stoi(token.substr(colon + 1)));
      } catch (const std::exception&) {
        throw ParseError("scenario line " + std::to_string(line_number) +
                         ": malformed item:outcome '" + token + "'");
      }
    }
    scenarios.push_back(PartialRealization::from_sorted_pairs(std::move(pairs)));
    weights.push_back(std::move(weight));
  }
  if (scenarios.empty()) throw ParseError("no scenarios in input");
  return ScenarioDistribution(std::move(scenarios), std::move(weights));
}

void save_scenarios(std::ostream& out, const ScenarioDistribution& dist) {
  for (int i = 0; i < dist.scenario_count(); ++i) {
    const Rational& weight = dist.weight(i);
    out << weight.get_num().get_str() << ' ' << weight.get_den().get_str();
    for (ItemId item : dist.item_domain()) {
      out << ' ' << item << ':' << dist.scenario_outcome(i, item);
    }
    out << '\n';
  }
}

ProductDistribution load_product(std::istream& in) {
  std::vector<std::vector<Rational>> marginals;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!strip_line(line)) continue;
    std::istringstream fields(line);
    std::vector<Rational> marginal;
    std::string token;
    while (fields >> token) marginal.push_back(parse_rational(token));
    if (marginal.empty()) {
      throw ParseError("product line " + std::to_string(line_number) +
                       ": no probabilities");
    }
    marginals.push_back(std::move(marginal));
  }
  if (marginals.empty()) throw ParseError("no marginals in input");
  return ProductDistribution(std::move(marginals));
}

void save_product(std::ostream& out, const ProductDistribution& dist) {
  for (int item = 0; item < dist.item_count(); ++item) {
    const auto& marginal = dist.marginal(item);
    for (std::size_t w = 0; w < marginal.size(); ++w) {
      if (w > 0) out << ' ';
      out << to_string(marginal[w]);
    }
    out << '\n';
  }
}

}  // namespace ascover

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

#include "ascover/ssc.hpp"

#include <algorithm>
#include <istream>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "ascover/errors.hpp"
#include "bitset64.hpp"

namespace ascover {

AscInstance build_ssc(const SscInstanceData& data, bool trust_coverable,
                      std::int64_t enumeration_cap) {
  const int items = static_cast<int>(data.coverage.size());
  const int elements = static_cast<int>(data.element_weights.size());
  if (static_cast<int>(data.item_costs.size()) != items ||
      static_cast<int>(data.marginals.size()) != items) {
    throw Error("coverage, costs and marginals must align per item");
  }
  for (int e = 0; e < items; ++e) {
    if (data.coverage[e].size() != data.marginals[e].size()) {
      throw Error("item " + std::to_string(e) +
                  ": one coverage set per outcome required");
    }
    for (const auto& covered : data.coverage[e]) {
      for (int element : covered) {
        if (element < 0 || element >= elements) {
          throw Error("covered element out of range");
        }
      }
    }
  }
  for (const Rational& weight : data.element_weights) {
    if (weight <= 0 || !is_integral(weight)) {
      throw Error(
          "element weights must be positive integers; scale the instance");
    }
  }
  if (data.quota < 0 || !is_integral(data.quota)) {
    throw Error("the quota must be a non-negative integer");
  }

  // Weighted union via per-(item,outcome) element bitsets.
  auto covers = std::make_shared<std::vector<std::vector<internal::Bitset64>>>();
  covers->reserve(items);
  for (int e = 0; e < items; ++e) {
    std::vector<internal::Bitset64> per_outcome;
    per_outcome.reserve(data.coverage[e].size());
    for (const auto& covered : data.coverage[e]) {
      internal::Bitset64 bits(elements);
      for (int element : covered) bits.set(element);
      per_outcome.push_back(std::move(bits));
    }
    covers->push_back(std::move(per_outcome));
  }
  auto weights = std::make_shared<std::vector<Rational>>(data.element_weights);
  const Rational quota = data.quota;

  UtilityModel utility(
      [covers, weights, elements, quota](const PartialRealization& psi) {
        internal::Bitset64 covered(elements);
        for (const auto& [item, outcome] : psi.pairs()) {
          covered.or_with((*covers)[item][outcome]);
        }
        Rational total(0);
        for (int v = 0; v < elements; ++v) {
          if (covered.test(v)) total += (*weights)[v];
        }
        return std::min(total, quota);
      },
      quota, Rational(1));

  auto distribution =
      std::make_shared<ProductDistribution>(data.marginals);

  if (!trust_coverable) {
    std::vector<ItemId> all(items);
    std::iota(all.begin(), all.end(), 0);
    ScenarioDistribution scenarios =
        product_to_scenarios(*distribution, all, enumeration_cap);
    for (int i = 0; i < scenarios.scenario_count(); ++i) {
      const PartialRealization phi = scenarios.scenario(i);
      if (!utility.covered(phi)) {
        std::ostringstream message;
        message << "realization";
        for (const auto& [item, outcome] : phi.pairs()) {
          message << ' ' << item << ':' << outcome;
        }
        message << " cannot reach the quota";
        throw CoverabilityViolation(message.str());
      }
    }
  }

  return AscInstance{ItemSet(data.item_costs), std::move(utility),
                     std::move(distribution)};
}

SscInstanceData load_ssc(std::istream& in) {
  SscInstanceData data;
  data.quota = Rational(-1);
  bool weights_seen = false;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword == "weights") {
      std::string token;
      while (fields >> token) {
        data.element_weights.push_back(parse_rational(token));
      }
      weights_seen = true;
    } else if (keyword == "quota") {
      std::string token;
      if (!(fields >> token)) {
        throw ParseError("line " + std::to_string(line_number) +
                         ": quota value missing");
      }
      data.quota = parse_rational(token);
    } else if (keyword == "item") {
      std::string cost;
      if (!(fields >> cost)) {
        throw ParseError("line " + std::to_string(line_number) +
                         ": item cost missing");
      }
      data.item_costs.push_back(parse_rational(cost));
      data.coverage.emplace_back();
      data.marginals.emplace_back();
    } else if (keyword == "outcome") {
      if (data.coverage.empty()) {
        throw ParseError("line " + std::to_string(line_number) +
                         ": outcome before any item");
      }
      std::string prob;
      if (!(fields >> prob)) {
        throw ParseError("line " + std::to_string(line_number) +
                         ": outcome probability missing");
      }
      data.marginals.back().push_back(parse_rational(prob));
      std::vector<int> covered;
      int element;
      while (fields >> element) covered.push_back(element);
      data.coverage.back().push_back(std::move(covered));
    } else {
      throw ParseError("line " + std::to_string(line_number) +
                       ": unknown keyword '" + keyword + "'");
    }
  }
  if (!weights_seen || data.quota < 0 || data.coverage.empty()) {
    throw ParseError("instance needs weights, a quota and at least one item");
  }
  return data;
}

void save_ssc(std::ostream& out, const SscInstanceData& data) {
  out << "weights";
  for (const Rational& weight : data.element_weights) {
    out << ' ' << to_string(weight);
  }
  out << '\n' << "quota " << to_string(data.quota) << '\n';
  for (std::size_t e = 0; e < data.coverage.size(); ++e) {
    out << "item " << to_string(data.item_costs[e]) << '\n';
    for (std::size_t w = 0; w < data.coverage[e].size(); ++w) {
      out << "outcome " << to_string(data.marginals[e][w]);
      for (int element : data.coverage[e][w]) out << ' ' << element;
      out << '\n';
    }
  }
}

}  // namespace ascover

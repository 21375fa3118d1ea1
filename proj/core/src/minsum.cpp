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

#include "ascover/minsum.hpp"

#include <algorithm>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "ascover/errors.hpp"

namespace ascover {

MultiInstance build_minsum_setcover(const std::vector<std::vector<int>>& sets,
                                    std::vector<Rational> costs) {
  if (sets.empty()) throw Error("set cover instance with no sets");
  if (sets.size() != costs.size()) throw Error("one cost per set required");

  int elements = 0;
  for (const auto& set : sets) {
    for (int element : set) {
      if (element < 0) throw Error("negative element index");
      elements = std::max(elements, element + 1);
    }
  }

  // members[v]: which sets contain element v.
  std::vector<std::vector<int>> members(elements);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (int element : sets[s]) {
      members[element].push_back(static_cast<int>(s));
    }
  }
  for (int v = 0; v < elements; ++v) {
    if (members[v].empty()) {
      throw UncoverableElement("element " + std::to_string(v) +
                               " appears in no set");
    }
    std::sort(members[v].begin(), members[v].end());
    members[v].erase(std::unique(members[v].begin(), members[v].end()),
                     members[v].end());
  }

  // One indicator utility per element over the deterministic point mass:
  // every item has the single outcome 0.
  std::vector<UtilityModel> utilities;
  utilities.reserve(elements);
  auto shared_members =
      std::make_shared<std::vector<std::vector<int>>>(std::move(members));
  for (int v = 0; v < elements; ++v) {
    utilities.emplace_back(
        [shared_members, v](const PartialRealization& psi) {
          for (int s : (*shared_members)[v]) {
            if (psi.contains(s)) return Rational(1);
          }
          return Rational(0);
        },
        Rational(1), Rational(1));
  }

  const int n = static_cast<int>(sets.size());
  std::vector<ItemId> domain(n);
  std::vector<Outcome> row(n, 0);
  for (int s = 0; s < n; ++s) domain[s] = s;
  auto distribution =
      std::make_shared<ScenarioDistribution>(ScenarioDistribution::from_rows(
          std::move(domain), {std::move(row)}, {Rational(1)}));

  return MultiInstance{ItemSet(std::move(costs)), std::move(utilities),
                       std::move(distribution)};
}

std::pair<std::vector<std::vector<int>>, std::vector<Rational>> load_setcover(
    std::istream& in) {
  std::vector<std::vector<int>> sets;
  std::vector<Rational> costs;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("set line " + std::to_string(line_number) +
                       ": expected 'cost: elements'");
    }
    std::string cost_text = line.substr(0, colon);
    const auto begin = cost_text.find_first_not_of(" \t");
    const auto end = cost_text.find_last_not_of(" \t");
    if (begin == std::string::npos) {
      throw ParseError("set line " + std::to_string(line_number) +
                       ": missing cost");
    }
    costs.push_back(parse_rational(cost_text.substr(begin, end - begin + 1)));
    std::istringstream fields(line.substr(colon + 1));
    std::vector<int> set;
    int element;
    while (fields >> element) set.push_back(element);
    if (!fields.eof()) {
      throw ParseError("set line " + std::to_string(line_number) +
                       ": elements must be integers");
    }
    sets.push_back(std::move(set));
  }
  if (sets.empty()) throw ParseError("no sets in input");
  return {std::move(sets), std::move(costs)};
}

void save_setcover(std::ostream& out,
                   const std::vector<std::vector<int>>& sets,
                   const std::vector<Rational>& costs) {
  for (std::size_t s = 0; s < sets.size(); ++s) {
    out << to_string(costs[s]) << ':';
    for (int element : sets[s]) out << ' ' << element;
    out << '\n';
  }
}

}  // namespace ascover

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

#include "ascover/odt.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <utility>

#include "ascover/errors.hpp"
#include "bitset64.hpp"

namespace ascover {

OdtInstance::OdtInstance(std::vector<std::vector<Outcome>> matrix,
                         std::vector<Rational> costs, bool deduplicate)
    : costs_(std::move(costs)) {
  if (matrix.empty()) throw Error("hypothesis matrix is empty");
  const std::size_t tests = costs_.size();
  for (const auto& row : matrix) {
    if (row.size() != tests) {
      throw Error("hypothesis row width does not match the test count");
    }
    for (Outcome outcome : row) {
      if (outcome < 0) throw Error("negative test outcome");
      outcome_count_ = std::max(outcome_count_, outcome + 1);
    }
  }
  for (const Rational& cost : costs_) {
    if (cost <= 0) throw Error("test costs must be strictly positive");
  }

  std::map<std::vector<Outcome>, bool> seen;
  for (auto& row : matrix) {
    auto [it, inserted] = seen.try_emplace(row, true);
    if (inserted) {
      matrix_.push_back(std::move(row));
    } else if (!deduplicate) {
      throw UnidentifiableInstance(
          "two hypotheses answer every test identically");
    }
  }
}

AscInstance build_odt(const OdtInstance& instance) {
  const int m = instance.hypothesis_count();
  const int n = instance.test_count();
  const int outcomes = instance.outcome_count();

  // survivors[e][w]: hypotheses consistent with test e returning w.  The
  // eliminated count for psi is m minus the size of the intersection of the
  // observed survivor sets.
  auto survivors = std::make_shared<std::vector<std::vector<internal::Bitset64>>>();
  survivors->assign(n, std::vector<internal::Bitset64>(
                           outcomes, internal::Bitset64(m)));
  for (int h = 0; h < m; ++h) {
    for (int e = 0; e < n; ++e) {
      (*survivors)[e][instance.matrix()[h][e]].set(h);
    }
  }

  UtilityModel utility(
      [survivors, m](const PartialRealization& psi) {
        internal::Bitset64 alive = internal::Bitset64::all_set(m);
        for (const auto& [item, outcome] : psi.pairs()) {
          alive.and_with((*survivors)[item][outcome]);
        }
        return Rational(m - alive.count());
      },
      Rational(m - 1), Rational(1));

  auto distribution = std::make_shared<ScenarioDistribution>(
      ScenarioDistribution::from_rows(
          [&] {
            std::vector<ItemId> domain(n);
            for (int e = 0; e < n; ++e) domain[e] = e;
            return domain;
          }(),
          instance.matrix(), std::vector<Rational>(m, Rational(1, m))));

  return AscInstance{ItemSet(instance.costs()), std::move(utility),
                     std::move(distribution)};
}

AscInstance build_odt(std::vector<std::vector<Outcome>> matrix,
                      std::vector<Rational> costs, bool deduplicate) {
  return build_odt(
      OdtInstance(std::move(matrix), std::move(costs), deduplicate));
}

OdtInstance load_odt_csv(std::istream& in) {
  std::string line;
  bool header_seen = false;
  std::size_t tests = 0;
  std::vector<std::vector<Outcome>> matrix;
  std::vector<Rational> costs;
  int line_number = 0;

  auto split = [](const std::string& text) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(text);
    while (std::getline(stream, cell, ',')) {
      // Trim surrounding whitespace.
      auto begin = cell.find_first_not_of(" \t\r");
      auto end = cell.find_last_not_of(" \t\r");
      cells.push_back(begin == std::string::npos
                          ? std::string()
                          : cell.substr(begin, end - begin + 1));
    }
    return cells;
  };

  while (std::getline(in, line)) {
    ++line_number;
    const auto content = line.find_first_not_of(" \t\r\n");
    if (content == std::string::npos) continue;
    std::vector<std::string> cells = split(line);
    if (!cells.empty() && cells.front() == "#costs") {
      if (cells.size() != tests + 1) {
        throw ParseError("#costs row must list one cost per test");
      }
      for (std::size_t i = 1; i < cells.size(); ++i) {
        costs.push_back(parse_rational(cells[i]));
      }
      continue;
    }
    if (line[content] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      tests = cells.size();
      if (tests == 0) throw ParseError("empty header row");
      continue;
    }
    if (cells.size() != tests) {
      throw ParseError("row " + std::to_string(line_number) + " has " +
                       std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(tests));
    }
    std::vector<Outcome> row;
    row.reserve(tests);
    for (const std::string& cell : cells) {
      try {
        row.push_back(std::stoi(cell));
      } catch (const std::exception&) {
        throw ParseError("row " + std::to_string(line_number) +
                         ": malformed outcome '" + cell + "'");
      }
    }
    matrix.push_back(std::move(row));
  }
  if (!header_seen || matrix.empty()) {
    throw ParseError("matrix needs a header row and at least one hypothesis");
  }
  if (costs.empty()) costs.assign(tests, Rational(1));
  return OdtInstance(std::move(matrix), std::move(costs));
}

void save_odt_csv(std::ostream& out, const OdtInstance& instance) {
  for (int e = 0; e < instance.test_count(); ++e) {
    if (e > 0) out << ',';
    out << 't' << e;
  }
  out << '\n';
  for (const auto& row : instance.matrix()) {
    for (std::size_t e = 0; e < row.size(); ++e) {
      if (e > 0) out << ',';
      out << row[e];
    }
    out << '\n';
  }
  bool unit_costs = true;
  for (const Rational& cost : instance.costs()) {
    if (cost != 1) unit_costs = false;
  }
  if (!unit_costs) {
    out << "#costs";
    for (const Rational& cost : instance.costs()) {
      out << ',' << to_string(cost);
    }
    out << '\n';
  }
}

}  // namespace ascover

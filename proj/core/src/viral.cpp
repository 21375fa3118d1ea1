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

#include "ascover/viral.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "ascover/errors.hpp"
#include "bitset64.hpp"

namespace ascover {

CascadeNetwork::CascadeNetwork(std::vector<Rational> node_costs,
                               std::vector<CascadeArc> arcs)
    : node_costs_(std::move(node_costs)), arcs_(std::move(arcs)) {
  const int n = node_count();
  for (const Rational& cost : node_costs_) {
    if (cost <= 0) throw Error("node costs must be strictly positive");
  }
  for (const CascadeArc& arc : arcs_) {
    if (arc.from < 0 || arc.from >= n || arc.to < 0 || arc.to >= n) {
      throw Error("arc endpoint out of range");
    }
    if (arc.from == arc.to) {
      throw Error("self-loops are implicit and must not appear in the arcs");
    }
    if (arc.probability < 0 || arc.probability > 1) {
      throw Error("arc probability outside [0, 1]");
    }
  }
}

ArcLabel self_loop_label(const CascadeOutcome& outcome, int node) {
  return node == outcome.seed ? ArcLabel::active : ArcLabel::inactive;
}

CascadeOutcome cascade_outcome(const CascadeNetwork& net,
                               const std::vector<bool>& active, int seed) {
  if (static_cast<int>(active.size()) != net.arc_count()) {
    throw Error("arc realization size does not match the arc count");
  }
  if (seed < 0 || seed >= net.node_count()) {
    throw Error("seed node out of range");
  }

  // Reachability from the seed over active arcs.
  std::vector<bool> reached(net.node_count(), false);
  reached[seed] = true;
  std::deque<int> frontier{seed};
  // Adjacency on demand; networks here are small.
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop_front();
    for (int a = 0; a < net.arc_count(); ++a) {
      const CascadeArc& arc = net.arcs()[a];
      if (arc.from == u && active[a] && !reached[arc.to]) {
        reached[arc.to] = true;
        frontier.push_back(arc.to);
      }
    }
  }

  CascadeOutcome outcome;
  outcome.seed = seed;
  outcome.arc_labels.resize(net.arc_count());
  for (int a = 0; a < net.arc_count(); ++a) {
    const CascadeArc& arc = net.arcs()[a];
    if (!reached[arc.from]) {
      outcome.arc_labels[a] = ArcLabel::unobserved;
    } else {
      outcome.arc_labels[a] = active[a] ? ArcLabel::active : ArcLabel::inactive;
    }
  }
  return outcome;
}

std::vector<bool> influenced_nodes(const CascadeNetwork& net,
                                   std::span<const CascadeOutcome> outcomes) {
  std::vector<bool> influenced(net.node_count(), false);
  for (const CascadeOutcome& outcome : outcomes) {
    if (outcome.seed >= 0) influenced[outcome.seed] = true;  // self-loop
    for (int a = 0; a < net.arc_count(); ++a) {
      if (outcome.arc_labels[a] == ArcLabel::active) {
        influenced[net.arcs()[a].to] = true;
      }
    }
  }
  return influenced;
}

int viral_utility(const CascadeNetwork& net,
                  std::span<const CascadeOutcome> outcomes) {
  const std::vector<bool> influenced = influenced_nodes(net, outcomes);
  return static_cast<int>(
      std::count(influenced.begin(), influenced.end(), true));
}

ViralMode ViralMode::exact() { return ViralMode{}; }

ViralMode ViralMode::monte_carlo(int sample_count, std::uint64_t seed) {
  ViralMode mode;
  mode.kind = Kind::monte_carlo;
  mode.sample_count = sample_count;
  mode.seed = seed;
  return mode;
}

namespace {

struct ScenarioBuild {
  std::shared_ptr<ScenarioDistribution> distribution;
  std::vector<CascadeOutcome> outcome_table;
  // influence[w] = influenced-node bitset of outcome index w, for the
  // utility's inner loop.
  std::shared_ptr<std::vector<internal::Bitset64>> influence;
};

// Enumerate or sample arc realizations, compute every node's observation in
// each, and intern the observations into a dense outcome table.
ScenarioBuild build_scenarios(const CascadeNetwork& net,
                              const ViralMode& mode) {
  const int n = net.node_count();
  const int arcs = net.arc_count();

  std::vector<std::vector<bool>> realizations;
  std::vector<Rational> weights;

  if (mode.kind == ViralMode::Kind::exact) {
    if (arcs > mode.max_exact_arcs) {
      throw EnumerationTooLarge(
          "exact mode enumerates 2^|arcs| realizations; " +
          std::to_string(arcs) + " arcs exceeds the cap of " +
          std::to_string(mode.max_exact_arcs));
    }
    const std::uint64_t total = std::uint64_t{1} << arcs;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::vector<bool> active(arcs);
      Rational weight(1);
      for (int a = 0; a < arcs; ++a) {
        const bool on = (mask >> a) & 1;
        active[a] = on;
        const Rational& p = net.arcs()[a].probability;
        weight *= on ? p : Rational(1 - p);
      }
      if (weight == 0) continue;
      realizations.push_back(std::move(active));
      weights.push_back(std::move(weight));
    }
  } else {
    if (mode.sample_count <= 0) {
      throw Error("monte-carlo mode needs a positive sample count");
    }
    std::mt19937_64 rng(mode.seed);
    for (int s = 0; s < mode.sample_count; ++s) {
      std::vector<bool> active(arcs);
      for (int a = 0; a < arcs; ++a) {
        // Exact Bernoulli draw: u/2^64 < p.
        const std::uint64_t raw = rng();
        Rational u(mpz_class(static_cast<unsigned long>(raw)),
                   mpz_class(1) << 64);
        u.canonicalize();
        active[a] = u < net.arcs()[a].probability;
      }
      realizations.push_back(std::move(active));
      weights.push_back(Rational(1, mode.sample_count));
    }
  }

  // Intern per-node observations.
  std::map<CascadeOutcome, Outcome> index_of;
  std::vector<CascadeOutcome> table;
  std::vector<std::vector<Outcome>> rows;
  rows.reserve(realizations.size());
  for (const auto& active : realizations) {
    std::vector<Outcome> row(n);
    for (int w = 0; w < n; ++w) {
      CascadeOutcome outcome = cascade_outcome(net, active, w);
      auto [it, inserted] =
          index_of.try_emplace(std::move(outcome), table.size());
      if (inserted) table.push_back(it->first);
      row[w] = it->second;
    }
    rows.push_back(std::move(row));
  }

  auto influence = std::make_shared<std::vector<internal::Bitset64>>();
  influence->reserve(table.size());
  for (const CascadeOutcome& outcome : table) {
    internal::Bitset64 bits(n);
    const std::vector<bool> nodes =
        influenced_nodes(net, std::span(&outcome, 1));
    for (int v = 0; v < n; ++v) {
      if (nodes[v]) bits.set(v);
    }
    influence->push_back(std::move(bits));
  }

  std::vector<ItemId> domain(n);
  for (int w = 0; w < n; ++w) domain[w] = w;
  ScenarioBuild build;
  build.distribution =
      std::make_shared<ScenarioDistribution>(ScenarioDistribution::from_rows(
          std::move(domain), std::move(rows), std::move(weights)));
  build.outcome_table = std::move(table);
  build.influence = std::move(influence);
  return build;
}

}  // namespace

ViralInstance build_viral(const CascadeNetwork& net, int quota,
                          const ViralMode& mode) {
  if (quota < 0 || quota > net.node_count()) {
    throw Error("quota must lie between 0 and the node count");
  }
  ScenarioBuild scenarios = build_scenarios(net, mode);

  auto influence = scenarios.influence;
  const int n = net.node_count();
  UtilityModel utility(
      [influence, n, quota](const PartialRealization& psi) {
        internal::Bitset64 covered(n);
        for (const auto& [item, outcome] : psi.pairs()) {
          covered.or_with((*influence)[outcome]);
        }
        return Rational(std::min(covered.count(), quota));
      },
      Rational(quota), Rational(1));

  ViralInstance instance{
      AscInstance{ItemSet(net.node_costs()), std::move(utility),
                  scenarios.distribution},
      std::move(scenarios.outcome_table)};
  return instance;
}

MultiQuotaViralInstance build_multi_quota_viral(const CascadeNetwork& net,
                                                std::vector<int> quotas,
                                                const ViralMode& mode) {
  if (quotas.empty()) throw Error("no quotas given");
  if (!std::is_sorted(quotas.begin(), quotas.end())) {
    throw Error("quotas must be non-decreasing");
  }
  if (quotas.front() <= 0 || quotas.back() > net.node_count()) {
    throw Error("quotas must lie in [1, node count]");
  }

  ScenarioBuild scenarios = build_scenarios(net, mode);
  const int n = net.node_count();

  std::vector<UtilityModel> utilities;
  utilities.reserve(quotas.size());
  // Shared quota 1 after dividing by q_r; granularity 1/q_k since the
  // largest quota has the finest normalized steps.
  const Rational granularity(1, quotas.back());
  for (int q : quotas) {
    auto influence = scenarios.influence;
    utilities.emplace_back(
        [influence, n, q](const PartialRealization& psi) {
          internal::Bitset64 covered(n);
          for (const auto& [item, outcome] : psi.pairs()) {
            covered.or_with((*influence)[outcome]);
          }
          return make_rational(std::min(covered.count(), q), q);
        },
        Rational(1), granularity);
  }

  MultiQuotaViralInstance instance{
      MultiInstance{ItemSet(net.node_costs()), std::move(utilities),
                    scenarios.distribution},
      std::move(scenarios.outcome_table)};
  return instance;
}

CascadeNetwork load_cascade(std::istream& in) {
  enum class Section { none, nodes, arcs };
  Section section = Section::none;
  std::map<int, Rational> nodes;
  std::vector<CascadeArc> arcs;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "nodes") {
      section = Section::nodes;
      continue;
    }
    if (first == "arcs") {
      section = Section::arcs;
      continue;
    }
    if (section == Section::nodes) {
      std::string cost;
      if (!(fields >> cost)) {
        throw ParseError("node line " + std::to_string(line_number) +
                         ": expected 'id cost'");
      }
      nodes[std::stoi(first)] = parse_rational(cost);
    } else if (section == Section::arcs) {
      std::string to, prob;
      if (!(fields >> to >> prob)) {
        throw ParseError("arc line " + std::to_string(line_number) +
                         ": expected 'from to probability'");
      }
      arcs.push_back(
          {std::stoi(first), std::stoi(to), parse_rational(prob)});
    } else {
      throw ParseError("line " + std::to_string(line_number) +
                       " outside the nodes/arcs sections");
    }
  }
  if (nodes.empty()) throw ParseError("cascade file has no nodes");
  const int count = nodes.rbegin()->first + 1;
  if (static_cast<int>(nodes.size()) != count || nodes.begin()->first != 0) {
    throw ParseError("node ids must be contiguous from 0");
  }
  std::vector<Rational> costs;
  costs.reserve(count);
  for (const auto& [id, cost] : nodes) costs.push_back(cost);
  return CascadeNetwork(std::move(costs), std::move(arcs));
}

void save_cascade(std::ostream& out, const CascadeNetwork& net) {
  out << "nodes\n";
  for (int v = 0; v < net.node_count(); ++v) {
    out << v << ' ' << to_string(net.node_costs()[v]) << '\n';
  }
  out << "arcs\n";
  for (const CascadeArc& arc : net.arcs()) {
    out << arc.from << ' ' << arc.to << ' ' << to_string(arc.probability)
        << '\n';
  }
}

}  // namespace ascover

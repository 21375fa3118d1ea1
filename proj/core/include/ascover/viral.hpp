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

#ifndef ASCOVER_VIRAL_HPP_
#define ASCOVER_VIRAL_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ascover/instance.hpp"
#include "ascover/items.hpp"
#include "ascover/rational.hpp"

namespace ascover {

struct CascadeArc {
  int from;
  int to;
  Rational probability;  // independent transmission probability in [0,1]
};

// Directed network for independent-cascade seeding.  Selecting (seeding) a
// node costs its activation cost; each arc then transmits independently.
// Self-loops are excluded from the arc list; the observation model adds one
// implicit self-loop per node, active exactly for the seeded node.
class CascadeNetwork {
 public:
  CascadeNetwork(std::vector<Rational> node_costs,
                 std::vector<CascadeArc> arcs);

  int node_count() const { return static_cast<int>(node_costs_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Rational>& node_costs() const { return node_costs_; }
  const std::vector<CascadeArc>& arcs() const { return arcs_; }

 private:
  std::vector<Rational> node_costs_;
  std::vector<CascadeArc> arcs_;
};

enum class ArcLabel : std::int8_t { inactive = 0, active = 1, unobserved = 2 };

// Full feedback from seeding one node: each base arc (u,v) is revealed as
// active/inactive iff u is reachable from the seed via active arcs, and is
// unobserved otherwise.  Self-loop labels are implied by the seed field
// (the seed's self-loop is active, all others inactive).
struct CascadeOutcome {
  int seed = -1;
  std::vector<ArcLabel> arc_labels;  // aligned with CascadeNetwork::arcs()

  bool operator==(const CascadeOutcome&) const = default;
  auto operator<=>(const CascadeOutcome&) const = default;
};

ArcLabel self_loop_label(const CascadeOutcome& outcome, int node);

// Observation produced by seeding `seed` when the arc realization is
// `active` (one flag per base arc): breadth-first reachability over active
// arcs, then the three-case labeling above.
CascadeOutcome cascade_outcome(const CascadeNetwork& net,
                               const std::vector<bool>& active, int seed);

// Nodes with some incoming active arc across the observations, counting
// self-loops; each node counts once however many observations reach it.
std::vector<bool> influenced_nodes(const CascadeNetwork& net,
                                   std::span<const CascadeOutcome> outcomes);
int viral_utility(const CascadeNetwork& net,
                  std::span<const CascadeOutcome> outcomes);

struct ViralMode {
  enum class Kind { exact, monte_carlo };
  Kind kind = Kind::exact;
  int sample_count = 0;
  std::uint64_t seed = 0;
  // Exact mode enumerates all 2^|A| arc realizations; refuse beyond this.
  int max_exact_arcs = 20;

  static ViralMode exact();
  static ViralMode monte_carlo(int sample_count, std::uint64_t seed);
};

// A built seeding instance plus the outcome table decoding the opaque
// outcome indices used in its realizations.
struct ViralInstance {
  AscInstance asc;
  std::vector<CascadeOutcome> outcomes;  // index = Outcome value
};

struct MultiQuotaViralInstance {
  MultiInstance multi;
  std::vector<CascadeOutcome> outcomes;
};

// Cover at least `quota` nodes: utility min(influenced count, quota).
// Scenarios are arc realizations, either fully enumerated with product
// weights (exact) or N equal-weight draws (monte_carlo); in the latter case
// the empirical prior is fixed up front so the policy and its evaluation
// share one distribution.  Throws EnumerationTooLarge past the arc cap.
ViralInstance build_viral(const CascadeNetwork& net, int quota,
                          const ViralMode& mode);

// Nested quotas q_1 <= ... <= q_k, one normalized utility per quota:
// f_r = min(influenced, q_r) / q_r with common quota 1 and granularity
// 1/q_k.
MultiQuotaViralInstance build_multi_quota_viral(const CascadeNetwork& net,
                                                std::vector<int> quotas,
                                                const ViralMode& mode);

// File format: a "nodes" section of `id cost` lines followed by an "arcs"
// section of `u v probability` lines; '#' comments.
CascadeNetwork load_cascade(std::istream& in);
void save_cascade(std::ostream& out, const CascadeNetwork& net);

}  // namespace ascover

#endif  // ASCOVER_VIRAL_HPP_

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

#ifndef ASCOVER_SSC_HPP_
#define ASCOVER_SSC_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ascover/distribution.hpp"
#include "ascover/instance.hpp"
#include "ascover/rational.hpp"

namespace ascover {

// Stochastic set cover over a weighted ground set.  Item e with outcome w
// covers coverage[e][w] (element indices); items are independent with the
// given marginals.  The utility is min(weight of covered union, quota).
// Weights and the quota must be non-negative integers so the granularity is
// exactly one; scale fractional instances up front.
struct SscInstanceData {
  std::vector<std::vector<std::vector<int>>> coverage;  // [item][outcome]
  std::vector<Rational> element_weights;
  std::vector<Rational> item_costs;
  std::vector<std::vector<Rational>> marginals;  // [item][outcome]
  Rational quota;
};

// Builds the cover instance.  Unless trust_coverable is set, every full
// realization is enumerated (up to enumeration_cap scenarios) to verify the
// covered weight reaches the quota; CoverabilityViolation names a failing
// realization.
AscInstance build_ssc(const SscInstanceData& data, bool trust_coverable = false,
                      std::int64_t enumeration_cap = 1000000);

// Line format:
//   weights w1 w2 ... wk
//   quota Q
//   item COST
//   outcome PROB [elements...]   (one per outcome of the preceding item)
// '#' comments.
SscInstanceData load_ssc(std::istream& in);
void save_ssc(std::ostream& out, const SscInstanceData& data);

}  // namespace ascover

#endif  // ASCOVER_SSC_HPP_

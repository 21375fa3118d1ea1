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

#ifndef ASCOVER_SUBMODULARITY_HPP_
#define ASCOVER_SUBMODULARITY_HPP_

#include <cstdint>

#include "ascover/distribution.hpp"
#include "ascover/partial_realization.hpp"
#include "ascover/rational.hpp"
#include "ascover/utility.hpp"

namespace ascover {

// One witness that the diminishing-benefit property fails: psi is a
// sub-history of psi_prime, yet extending by item pays strictly more at the
// larger history.
struct SubmodularityViolation {
  PartialRealization psi;
  PartialRealization psi_prime;
  ItemId item;
  Rational benefit_at_psi;
  Rational benefit_at_prime;
};

struct SubmodularityReport {
  std::vector<SubmodularityViolation> violations;
  std::int64_t triples_checked = 0;
  bool exhaustive = false;

  bool passed() const { return violations.empty(); }
};

// Verifies benefit(item | psi) >= benefit(item | psi') over positive-
// probability pairs psi, a sub-history of psi', and items outside
// dom(psi').  Exhausts all triples when |scenarios| * 2^n stays within
// exhaustive_cap, otherwise samples `trials` triples from random prefix
// walks (deterministic in seed).  Exact comparisons; every violation is a
// genuine witness.
SubmodularityReport check_adaptive_submodular(
    const UtilityModel& f, const Distribution& dist, int trials,
    std::uint64_t seed, std::int64_t exhaustive_cap = 100000);

}  // namespace ascover

#endif  // ASCOVER_SUBMODULARITY_HPP_

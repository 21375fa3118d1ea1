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

#ifndef ASCOVER_UTILITY_HPP_
#define ASCOVER_UTILITY_HPP_

#include <functional>
#include <vector>

#include "ascover/partial_realization.hpp"
#include "ascover/rational.hpp"

namespace ascover {

// How coverage (value == quota) is decided.  Exact utilities count things
// and must hit the quota exactly; tolerant utilities compare with slack
// 1e-9 * max(quota, 1).
enum class ValueKind { exact, tolerant };

// A monotone utility f over partial realizations together with its quota Q
// and granularity eta.  Conventions assumed by the engines:
//   f(empty) = 0,
//   f is monotone under extension,
//   f(phi) = Q for every full realization in the support (coverable),
//   f(psi) > Q - eta implies f(psi) = Q.
// The last two are instance properties checked by builders and tests, not
// enforced per call.
class UtilityModel {
 public:
  using EvalFn = std::function<Rational(const PartialRealization&)>;

  UtilityModel(EvalFn evaluate, Rational quota, Rational granularity,
               ValueKind kind = ValueKind::exact);

  Rational value(const PartialRealization& psi) const;
  const Rational& quota() const { return quota_; }
  const Rational& granularity() const { return granularity_; }
  ValueKind kind() const { return kind_; }

  // Slack used by covered(); zero for exact utilities.
  const Rational& coverage_tolerance() const { return tolerance_; }

  bool covered(const PartialRealization& psi) const;
  bool covered_value(const Rational& value) const;

 private:
  EvalFn evaluate_;
  Rational quota_;
  Rational granularity_;
  Rational tolerance_;
  ValueKind kind_;
};

// Pointwise sum g = f_1 + ... + f_k with quota k*Q and granularity
// min over the parts.  All parts must share one quota; throws
// MismatchedQuota otherwise.
UtilityModel sum_functions(std::vector<UtilityModel> fs);

}  // namespace ascover

#endif  // ASCOVER_UTILITY_HPP_

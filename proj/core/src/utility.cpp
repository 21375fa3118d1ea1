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

#include "ascover/utility.hpp"

#include <algorithm>
#include <memory>
#include <utility>

#include "ascover/errors.hpp"

namespace ascover {

UtilityModel::UtilityModel(EvalFn evaluate, Rational quota,
                           Rational granularity, ValueKind kind)
    : evaluate_(std::move(evaluate)),
      quota_(std::move(quota)),
      granularity_(std::move(granularity)),
      tolerance_(0),
      kind_(kind) {
  if (!evaluate_) throw Error("utility without an evaluation function");
  quota_.canonicalize();
  granularity_.canonicalize();
  if (quota_ < 0) throw Error("utility quota must be non-negative");
  if (granularity_ <= 0) throw Error("utility granularity must be positive");
  if (kind_ == ValueKind::tolerant) {
    tolerance_ = Rational(1, 1000000000) * std::max(quota_, Rational(1));
  }
}

Rational UtilityModel::value(const PartialRealization& psi) const {
  return evaluate_(psi);
}

bool UtilityModel::covered(const PartialRealization& psi) const {
  return covered_value(evaluate_(psi));
}

bool UtilityModel::covered_value(const Rational& value) const {
  return value >= quota_ - tolerance_;
}

UtilityModel sum_functions(std::vector<UtilityModel> fs) {
  if (fs.empty()) throw Error("sum of zero utilities");
  const Rational quota = fs.front().quota();
  Rational granularity = fs.front().granularity();
  ValueKind kind = ValueKind::exact;
  for (const UtilityModel& f : fs) {
    if (f.quota() != quota) {
      throw MismatchedQuota("summed utilities must share one quota");
    }
    granularity = std::min(granularity, f.granularity());
    if (f.kind() == ValueKind::tolerant) kind = ValueKind::tolerant;
  }
  auto parts = std::make_shared<std::vector<UtilityModel>>(std::move(fs));
  const Rational total_quota = quota * static_cast<long>(parts->size());
  return UtilityModel(
      [parts](const PartialRealization& psi) {
        Rational total(0);
        for (const UtilityModel& f : *parts) total += f.value(psi);
        return total;
      },
      total_quota, granularity, kind);
}

}  // namespace ascover

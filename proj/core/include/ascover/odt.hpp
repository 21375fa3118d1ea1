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

#ifndef ASCOVER_ODT_HPP_
#define ASCOVER_ODT_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "ascover/instance.hpp"
#include "ascover/items.hpp"
#include "ascover/rational.hpp"

namespace ascover {

// Optimal decision tree input: m hypotheses responding to n tests, uniform
// prior over hypotheses.  matrix[h][e] is hypothesis h's outcome on test e.
// Tests are usually binary but entries may range over a larger outcome set.
// Duplicate hypothesis rows are merged on construction (keeping the first)
// unless deduplicate is false, in which case duplicates raise
// UnidentifiableInstance: two hypotheses with equal rows cannot be told
// apart by any policy.
class OdtInstance {
 public:
  OdtInstance(std::vector<std::vector<Outcome>> matrix,
              std::vector<Rational> costs, bool deduplicate = true);

  int hypothesis_count() const { return static_cast<int>(matrix_.size()); }
  int test_count() const { return static_cast<int>(costs_.size()); }
  int outcome_count() const { return outcome_count_; }

  const std::vector<std::vector<Outcome>>& matrix() const { return matrix_; }
  const std::vector<Rational>& costs() const { return costs_; }

 private:
  std::vector<std::vector<Outcome>> matrix_;
  std::vector<Rational> costs_;
  int outcome_count_ = 2;
};

// Hypothesis identification as a cover problem.  The utility counts
// eliminated hypotheses (those inconsistent with some observed test
// outcome), quota m-1, granularity 1; the distribution has one scenario per
// hypothesis, weight 1/m.  Working in eliminated counts instead of
// normalized fractions keeps every comparison exact; greedy decisions are
// invariant under that positive rescaling.
AscInstance build_odt(const OdtInstance& instance);
AscInstance build_odt(std::vector<std::vector<Outcome>> matrix,
                      std::vector<Rational> costs, bool deduplicate = true);

// CSV: header row of test names; one row of outcome digits per hypothesis;
// optional trailing "#costs" row with one rational per test.
OdtInstance load_odt_csv(std::istream& in);
void save_odt_csv(std::ostream& out, const OdtInstance& instance);

}  // namespace ascover

#endif  // ASCOVER_ODT_HPP_

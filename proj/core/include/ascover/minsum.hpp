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

#ifndef ASCOVER_MINSUM_HPP_
#define ASCOVER_MINSUM_HPP_

#include <iosfwd>
#include <utility>
#include <vector>

#include "ascover/instance.hpp"
#include "ascover/rational.hpp"

namespace ascover {

// Min-sum set cover: order the sets to minimize the summed first-coverage
// times of the ground elements.  Encoded as one 0/1 utility per element
// (1 once some chosen set contains it, quota = granularity = 1) over a
// deterministic point-mass distribution.  Elements are 0..max named index;
// every element must appear in some set (UncoverableElement otherwise).
MultiInstance build_minsum_setcover(const std::vector<std::vector<int>>& sets,
                                    std::vector<Rational> costs);

// File format: one line per set, "cost: e1 e2 ..."; '#' comments.
std::pair<std::vector<std::vector<int>>, std::vector<Rational>> load_setcover(
    std::istream& in);
void save_setcover(std::ostream& out,
                   const std::vector<std::vector<int>>& sets,
                   const std::vector<Rational>& costs);

}  // namespace ascover

#endif  // ASCOVER_MINSUM_HPP_

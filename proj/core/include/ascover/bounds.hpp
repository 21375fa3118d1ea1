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

#ifndef ASCOVER_BOUNDS_HPP_
#define ASCOVER_BOUNDS_HPP_

#include <cstdint>

#include "ascover/rational.hpp"

namespace ascover {

// Information-theoretic lower bound on the total identification cost of m
// equally likely hypotheses with unit-cost binary tests: m * log2(m).
// The only floating-point quantity in the library.
double entropy_bound(std::int64_t m);

// Exact lower bound from the depth-balanced binary tree on m leaves, which
// has 2^l - m leaves at depth l-1 and 2m - 2^l at depth l for l =
// ceil(log2 m), and minimizes the sum of p-th powers of leaf depths over
// all binary trees.  Returns that minimum as a total over the m leaves, or
// divided by m when as_total is false.
Rational huffman_bound(std::int64_t m, int p, bool as_total = true);

}  // namespace ascover

#endif  // ASCOVER_BOUNDS_HPP_

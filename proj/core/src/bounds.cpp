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

#include "ascover/bounds.hpp"

#include <cmath>

#include "ascover/errors.hpp"

namespace ascover {

double entropy_bound(std::int64_t m) {
  if (m < 1) throw Error("hypothesis count must be at least 1");
  return static_cast<double>(m) * std::log2(static_cast<double>(m));
}

Rational huffman_bound(std::int64_t m, int p, bool as_total) {
  if (m < 1) throw Error("hypothesis count must be at least 1");
  if (p < 1) throw Error("moment order must be at least 1");

  int level = 0;  // ceil(log2 m)
  while ((std::int64_t{1} << level) < m) ++level;

  // The depth-balanced tree has 2^level - m leaves one level up and
  // 2m - 2^level at the bottom; for m a power of two the first group is
  // empty and the formula collapses to m * level^p.
  const std::int64_t shallow = (std::int64_t{1} << level) - m;
  const std::int64_t deep = 2 * m - (std::int64_t{1} << level);

  mpz_class total(0);
  if (shallow > 0 && level >= 1) {
    mpz_class depth_power;
    mpz_ui_pow_ui(depth_power.get_mpz_t(), level - 1, p);
    total += mpz_class(static_cast<long>(shallow)) * depth_power;
  }
  if (deep > 0) {
    mpz_class depth_power;
    mpz_ui_pow_ui(depth_power.get_mpz_t(), level, p);
    total += mpz_class(static_cast<long>(deep)) * depth_power;
  }

  Rational bound(total);
  if (!as_total) bound /= static_cast<long>(m);
  return bound;
}

}  // namespace ascover

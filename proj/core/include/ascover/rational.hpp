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

#ifndef ASCOVER_RATIONAL_HPP_
#define ASCOVER_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ascover {

// All probabilities, costs and utility values are exact rationals.  Doubles
// only ever appear at the reporting boundary (CSV cells, the entropy bound).
using Rational = mpq_class;

// Builds num/den in canonical form.  den must be nonzero.
Rational make_rational(long num, long den = 1);

// Accepts "3", "-3/4" and decimal literals such as "0.25" (parsed exactly).
// Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& value);

// Requires is_integral(value) and the result to fit in int64.
std::int64_t to_int64(const Rational& value);

Rational rational_pow(const Rational& base, unsigned exponent);

double to_double(const Rational& value);

// Canonical form: "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& value);

// Fixed-point decimal expansion rounded half away from zero, trailing zeros
// trimmed ("7/2" with places=6 -> "3.5").
std::string decimal_string(const Rational& value, int places);

}  // namespace ascover

#endif  // ASCOVER_RATIONAL_HPP_

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

#include "ascover/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "ascover/errors.hpp"

namespace ascover {

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::string s(text);

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den)) {
      throw ParseError("malformed rational literal: " + s);
    }
    Rational value{mpq_class(mpz_class(num), mpz_class(den))};
    if (value.get_den() == 0) {
      throw ParseError("rational with zero denominator: " + s);
    }
    value.canonicalize();
    return value;
  }

  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!valid_integer_token(whole) || frac.empty() ||
        !valid_integer_token(frac) || frac.front() == '+' ||
        frac.front() == '-') {
      throw ParseError("malformed decimal literal: " + s);
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class num = mpz_class(whole) * scale;
    mpz_class frac_part(frac);
    num += negative ? -frac_part : frac_part;
    Rational value(mpq_class(num, scale));
    value.canonicalize();
    return value;
  }

  if (!valid_integer_token(s)) {
    throw ParseError("malformed rational literal: " + s);
  }
  return Rational(mpz_class(s));
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

std::int64_t to_int64(const Rational& value) {
  if (!is_integral(value)) {
    throw Error("expected an integral value, got " + to_string(value));
  }
  if (!value.get_num().fits_slong_p()) {
    throw Error("integral value out of range: " + to_string(value));
  }
  return value.get_num().get_si();
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // num and den were coprime, so their powers are too.
  return result;
}

double to_double(const Rational& value) { return value.get_d(); }

std::string to_string(const Rational& value) { return value.get_str(); }

std::string decimal_string(const Rational& value, int places) {
  if (places < 0) throw Error("negative decimal places");
  bool negative = value < 0;
  Rational magnitude = negative ? Rational(-value) : value;

  mpz_class scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;

  // Round half away from zero: floor((2*num*scale + den) / (2*den)).
  mpz_class scaled_num = magnitude.get_num() * scale;
  mpz_class rounded;
  mpz_class numerator = 2 * scaled_num + magnitude.get_den();
  mpz_class denominator = 2 * magnitude.get_den();
  mpz_fdiv_q(rounded.get_mpz_t(), numerator.get_mpz_t(),
             denominator.get_mpz_t());

  mpz_class whole = rounded / scale;
  mpz_class frac = rounded % scale;

  std::string result = whole.get_str();
  if (places > 0 && frac != 0) {
    std::string digits = frac.get_str();
    digits.insert(digits.begin(), places - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    result += "." + digits;
  }
  if (negative && rounded != 0) result.insert(result.begin(), '-');
  return result;
}

}  // namespace ascover

// Copyright 2026 The Choremarket Authors
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

#include "choremarket/rational.h"

#include <cctype>
#include <stdexcept>

namespace choremarket {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) {
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  }
  mpz_class value(std::string(s), 10);
  return negative ? mpz_class(-value) : value;
}

Rational ParseDecimal(std::string_view s, std::string_view whole) {
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mpz_class exp_value = ParseInteger(s.substr(e + 1), whole);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 4096) {
      throw std::invalid_argument("exponent out of range: '" +
                                  std::string(whole) + "'");
    }
    exponent = exp_value.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !AllDigits(int_part)) ||
        (!frac_part.empty() && !AllDigits(frac_part))) {
      throw std::invalid_argument("not a rational: '" + std::string(whole) +
                                  "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!AllDigits(s)) {
      throw std::invalid_argument("not a rational: '" + std::string(whole) +
                                  "'");
    }
    digits = std::string(s);
  }
  Rational value(mpz_class(digits, 10));
  long scale = exponent - fraction_digits;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale < 0) {
    value /= Rational(power);
  } else {
    value *= Rational(power);
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = ParseInteger(s.substr(0, slash), text);
    mpz_class den = ParseInteger(s.substr(slash + 1), text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator: '" + std::string(text) +
                                  "'");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
  }
  return ParseDecimal(s, text);
}

std::string ToString(const Rational& value) { return value.get_str(10); }

std::string ToString(const RationalVector& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(values[i]);
  }
  return out + ")";
}

double ToDouble(const Rational& value) { return value.get_d(); }

}  // namespace choremarket

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

#ifndef CHOREMARKET_RATIONAL_H_
#define CHOREMARKET_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace choremarket {

// Arbitrary-precision rational. gmpxx keeps results of arithmetic in
// canonical form (lowest terms, positive denominator).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Exact parse of "p/q" or of a finite decimal literal, exponent allowed
// ("-0.5", "1.25e-3"). Throws std::invalid_argument.
Rational ParseRational(std::string_view text);

// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& value);

std::string ToString(const RationalVector& values);

// Lossy conversion for display only.
double ToDouble(const Rational& value);

}  // namespace choremarket

#endif  // CHOREMARKET_RATIONAL_H_

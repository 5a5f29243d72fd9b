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

#ifndef CHOREMARKET_TESTS_TEST_UTIL_H_
#define CHOREMARKET_TESTS_TEST_UTIL_H_

#include <random>
#include <string>
#include <vector>

#include "choremarket/core.h"

namespace choremarket::testing {

inline Rational Q(const std::string& text) { return ParseRational(text); }

inline RationalVector Qs(std::initializer_list<const char*> texts) {
  RationalVector out;
  for (const char* text : texts) out.push_back(ParseRational(text));
  return out;
}

inline Matrix<Rational> QMatrix(
    std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<RationalVector> parsed;
  for (const auto& row : rows) parsed.push_back(Qs(row));
  Matrix<Rational> out(static_cast<int>(parsed.size()),
                       static_cast<int>(parsed.front().size()));
  for (int r = 0; r < out.rows(); ++r) {
    for (int c = 0; c < out.cols(); ++c) out(r, c) = parsed[r][c];
  }
  return out;
}

// The two-agent, two-chore instance with equilibria (-1,-2) and (-3,-3/2).
inline Instance ExampleOne() {
  return Instance(QMatrix({{"-1", "-8"}, {"-1", "-2"}}), Qs({"-1", "-2"}));
}

inline Instance Uniform(int agents, int chores, const char* value = "-1",
                        const char* budget = "-1") {
  Matrix<Rational> values(agents, chores);
  for (int i = 0; i < agents; ++i) {
    for (int j = 0; j < chores; ++j) values(i, j) = Q(value);
  }
  return Instance(values, RationalVector(agents, Q(budget)));
}

// -p/q with p, q uniform in [1, 20].
inline Rational RandomNegative(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, 20);
  Rational r(-pick(rng), pick(rng));
  r.canonicalize();
  return r;
}

inline Instance RandomInstance(std::mt19937_64& rng, int agents, int chores) {
  Matrix<Rational> values(agents, chores);
  for (int i = 0; i < agents; ++i) {
    for (int j = 0; j < chores; ++j) values(i, j) = RandomNegative(rng);
  }
  RationalVector budgets;
  for (int i = 0; i < agents; ++i) budgets.push_back(RandomNegative(rng));
  return Instance(values, budgets);
}

// Instance with dimensions drawn from [1, max_agents] x [1, max_chores].
inline Instance RandomSizedInstance(std::mt19937_64& rng, int max_agents,
                                    int max_chores) {
  std::uniform_int_distribution<int> n(1, max_agents), m(1, max_chores);
  const int agents = n(rng);
  return RandomInstance(rng, agents, m(rng));
}

inline RationalVector Magnitudes(const RationalVector& values) {
  RationalVector out;
  for (const auto& v : values) out.push_back(abs(v));
  return out;
}

}  // namespace choremarket::testing

#endif  // CHOREMARKET_TESTS_TEST_UTIL_H_

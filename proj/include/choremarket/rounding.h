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

#ifndef CHOREMARKET_ROUNDING_H_
#define CHOREMARKET_ROUNDING_H_

#include <stdexcept>
#include <vector>

#include "choremarket/certify.h"
#include "choremarket/core.h"
#include "choremarket/solver.h"

namespace choremarket {

// Raised when a consumption graph carries a cycle with product != 1.
class NotParetoOptimal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Removes every cycle of the consumption graph of a Pareto-optimal z by
// indifference-preserving cyclic transfers. Each transfer runs in the
// direction that shrinks the cycle's smallest share and stops when some
// shrinking edge reaches 0. Utilities are preserved exactly and no edge is
// ever added.
Allocation Acyclicize(const Instance& inst, const Allocation& z);

struct IndivisibleAllocation {
  std::vector<int> owner;   // owner[j]: agent holding chore j
  RationalVector b_prime;   // b'[i] = sum of p[j] over i's chores

  std::vector<int> Bundle(int agent) const;
  bool operator==(const IndivisibleAllocation&) const = default;
};

Allocation ToAllocation(const IndivisibleAllocation& alloc, int agents);

// Rounds a competitive allocation with a forest consumption graph. Each tree
// is rooted at its lowest-index agent. Chores with one consumer go to that
// consumer; then, root by root, an agent absorbs linked chores in ascending
// |p| while the bundle price stays >= b_i, and leftover child chores go to
// their lowest-index child agent, whose subtrees become new roots.
IndivisibleAllocation RoundToIntegral(const Instance& inst,
                                      const Allocation& z_acyc,
                                      const PriceVector& p,
                                      const RationalVector& budgets);

// For each agent with a non-empty bundle, some owned j and some j' give
// b_i - |p_j| <= b'_i <= b_i + |p_j'|; for an empty bundle, b'_i = 0 and
// some j' gives b_i + |p_j'| > 0.
bool BudgetsClose(const IndivisibleAllocation& alloc, const PriceVector& p,
                  const RationalVector& budgets);

// Every owned chore satisfies the minimal-pain-per-buck condition for its
// owner at prices p.
bool IsMpbConsistent(const Instance& inst, const IndivisibleAllocation& alloc,
                     const PriceVector& p);

// Weighted envy-freeness up to removing one own chore and adding one chore
// to the other bundle. Searches all witnesses.
bool CheckEf11(const Instance& inst, const IndivisibleAllocation& alloc,
               const RationalVector& weights);

// Weighted proportionality up to one chore.
bool CheckProp1(const Instance& inst, const IndivisibleAllocation& alloc,
                const RationalVector& weights);

struct FairRounding {
  IndivisibleAllocation allocation;
  PriceVector p;
  RationalVector budgets;   // -weights
  Allocation divisible;     // the competitive allocation that was rounded
  bool ef11 = false;
  bool prop1 = false;
  bool budgets_close = false;
  bool pareto_optimal = false;

  bool AllCertified() const {
    return ef11 && prop1 && budgets_close && pareto_optimal;
  }
};

// Default enumeration for rounding: the exact MWW family without graphs that
// leave someone isolated. It has the same competitive profiles as the full
// superset and is far smaller.
SolveOptions DefaultRoundingOptions();

// Computes a competitive allocation for budgets -weights (the outcome of the
// lexicographically first profile), removes its cycles and rounds it.
// Weights must be strictly positive.
FairRounding RoundFair(const Instance& inst, const RationalVector& weights,
                       const SolveOptions& options = DefaultRoundingOptions());

}  // namespace choremarket

#endif  // CHOREMARKET_ROUNDING_H_

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

#ifndef CHOREMARKET_CERTIFY_H_
#define CHOREMARKET_CERTIFY_H_

#include <string>
#include <variant>

#include "choremarket/core.h"
#include "choremarket/graphs.h"

namespace choremarket {

// tau[i] = b[i] / u[i]. Throws std::invalid_argument unless every u[i] and
// b[i] is strictly negative.
WeightVector TauWeights(const UtilityProfile& u, const RationalVector& budgets);

// q[j] = min_i |b[i] v[i][j] / u[i]|, the price magnitude chore j must have
// if u is competitive.
RationalVector MinWeightedDisutility(const Instance& inst,
                                     const UtilityProfile& u);

// Source -> agent i with capacity |b_i|, agent i -> chore j unbounded iff
// (i, j) is in the MWW graph for tau(u, b), chore j -> sink with capacity q_j.
struct FlowNetwork {
  ConsumptionGraph support;
  RationalVector agent_capacity;
  RationalVector chore_capacity;
  // Stands in for +infinity: exceeds any feasible flow.
  Rational unbounded;
};

FlowNetwork BuildFlowNetwork(const Instance& inst, const UtilityProfile& u);

struct CompetitiveOutcome {
  UtilityProfile u;
  Allocation z;
  PriceVector p;
  ConsumptionGraph graph;  // of z
};

enum class RejectionReason {
  kNonNegativeUtility,  // some u_i >= 0
  kSumMismatch,         // sum |b_i| != sum q_j
  kFlowDeficit,         // maximum flow < sum |b_i|
};

std::string ToString(RejectionReason reason);

struct Rejection {
  RejectionReason reason;
  Rational flow;      // maximum flow found (kFlowDeficit only)
  Rational required;  // sum |b_i|
};

using CertifyResult = std::variant<CompetitiveOutcome, Rejection>;

// Decides whether u is a competitive utility profile. On success the
// allocation is z[i][j] = F[i][j] / q[j] for the maximum flow F found by
// shortest augmenting paths, and prices are p[j] = -q[j].
CertifyResult CheckCompetitive(const Instance& inst, const UtilityProfile& u);

// Independent re-check of an outcome through prices alone. Besides basic
// consistency of z, u and p, it requires minimal pain per buck
// (z[i][j] > 0 implies v[i][j]/p[j] <= v[i][c]/p[c] for all c) and budget
// exhaustion (b[i] = sum_j p[j] z[i][j]).
bool VerifyOutcome(const Instance& inst, const CompetitiveOutcome& outcome);

}  // namespace choremarket

#endif  // CHOREMARKET_CERTIFY_H_

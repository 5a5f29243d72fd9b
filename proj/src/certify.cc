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

#include "choremarket/certify.h"

#include <algorithm>
#include <stdexcept>

#include "choremarket/max_flow.h"

namespace choremarket {

WeightVector TauWeights(const UtilityProfile& u, const RationalVector& budgets) {
  if (u.size() != budgets.size()) {
    throw std::invalid_argument("utility and budget vectors differ in length");
  }
  WeightVector tau(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (sgn(u[i]) >= 0 || sgn(budgets[i]) >= 0) {
      throw std::invalid_argument("tau weights need strictly negative u and b");
    }
    tau[i] = budgets[i] / u[i];
  }
  return tau;
}

RationalVector MinWeightedDisutility(const Instance& inst,
                                     const UtilityProfile& u) {
  const WeightVector tau = TauWeights(u, inst.budgets());
  RationalVector q(inst.chores());
  Rational weighted;
  for (int j = 0; j < inst.chores(); ++j) {
    for (int i = 0; i < inst.agents(); ++i) {
      weighted = tau[i] * inst.disutility(i, j);
      if (i == 0 || weighted < q[j]) q[j] = weighted;
    }
  }
  return q;
}

FlowNetwork BuildFlowNetwork(const Instance& inst, const UtilityProfile& u) {
  FlowNetwork net;
  net.support = MwwGraphForWeights(inst, TauWeights(u, inst.budgets()));
  net.chore_capacity = MinWeightedDisutility(inst, u);
  net.unbounded = 1;
  for (const auto& b : inst.budgets()) {
    net.agent_capacity.push_back(-b);
    net.unbounded -= b;
  }
  return net;
}

std::string ToString(RejectionReason reason) {
  switch (reason) {
    case RejectionReason::kNonNegativeUtility:
      return "non-negative-utility";
    case RejectionReason::kSumMismatch:
      return "sum-mismatch";
    case RejectionReason::kFlowDeficit:
      return "flow-deficit";
  }
  return "unknown";
}

CertifyResult CheckCompetitive(const Instance& inst, const UtilityProfile& u) {
  const int n = inst.agents();
  const int m = inst.chores();
  Rational required = 0;
  for (const auto& b : inst.budgets()) required -= b;
  for (const auto& value : u) {
    if (sgn(value) >= 0) {
      return Rejection{RejectionReason::kNonNegativeUtility, 0, required};
    }
  }

  const FlowNetwork net = BuildFlowNetwork(inst, u);
  Rational price_total = 0;
  for (const auto& q : net.chore_capacity) price_total += q;
  if (price_total != required) {
    return Rejection{RejectionReason::kSumMismatch, 0, required};
  }

  // Nodes: source 0, agents 1..n, chores n+1..n+m, sink n+m+1.
  const int source = 0;
  const int sink = n + m + 1;
  MaxFlow<Rational> flow(n + m + 2);
  for (int i = 0; i < n; ++i) flow.AddArc(source, 1 + i, net.agent_capacity[i]);
  Matrix<int> arc_of(n, m, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (net.support.HasEdge(i, j)) {
        arc_of(i, j) = flow.AddArc(1 + i, 1 + n + j, net.unbounded);
      }
    }
  }
  for (int j = 0; j < m; ++j) flow.AddArc(1 + n + j, sink, net.chore_capacity[j]);

  const Rational magnitude = flow.Solve(source, sink);
  if (magnitude != required) {
    return Rejection{RejectionReason::kFlowDeficit, magnitude, required};
  }

  CompetitiveOutcome outcome;
  outcome.u = u;
  outcome.z = Allocation(n, m, Rational(0));
  outcome.p = PriceVector(m);
  for (int j = 0; j < m; ++j) {
    outcome.p[j] = -net.chore_capacity[j];
    for (int i = 0; i < n; ++i) {
      if (arc_of(i, j) >= 0) {
        outcome.z(i, j) = flow.flow(arc_of(i, j)) / net.chore_capacity[j];
      }
    }
  }
  outcome.graph = ConsumptionGraphOf(outcome.z);
  return outcome;
}

bool VerifyOutcome(const Instance& inst, const CompetitiveOutcome& outcome) {
  const int n = inst.agents();
  const int m = inst.chores();
  const auto& z = outcome.z;
  const auto& p = outcome.p;
  if (static_cast<int>(p.size()) != m ||
      static_cast<int>(outcome.u.size()) != n || !IsFeasible(inst, z)) {
    return false;
  }
  for (const auto& price : p) {
    if (sgn(price) >= 0) return false;
  }
  for (int i = 0; i < n; ++i) {
    Rational utility = 0;
    Rational spent = 0;
    for (int j = 0; j < m; ++j) {
      utility += inst.value(i, j) * z(i, j);
      spent += p[j] * z(i, j);
    }
    if (utility != outcome.u[i] || spent != inst.budget(i)) return false;

    // Minimal pain per buck among all chores for agent i.
    Rational best = inst.value(i, 0) / p[0];
    for (int c = 1; c < m; ++c) {
      Rational ratio = inst.value(i, c) / p[c];
      if (ratio < best) best = ratio;
    }
    for (int j = 0; j < m; ++j) {
      if (sgn(z(i, j)) > 0 && inst.value(i, j) / p[j] != best) return false;
    }
  }
  return ConsumptionGraphOf(z) == outcome.graph;
}

}  // namespace choremarket

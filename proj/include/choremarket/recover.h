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

#ifndef CHOREMARKET_RECOVER_H_
#define CHOREMARKET_RECOVER_H_

#include <vector>

#include "choremarket/core.h"

namespace choremarket {

// Influences between agents of the same connected component of a graph.
// Each component is anchored at its lowest-index agent; the influence of
// every agent on the anchor is a path product along a breadth-first tree
// (neighbours in ascending index), and pairwise influences are derived from
// those: influence(i, k) = anchor_influence[k] / anchor_influence[i].
class InfluenceTable {
 public:
  InfluenceTable(const Instance& inst, const ConsumptionGraph& graph);

  int component_count() const { return static_cast<int>(components_.size()); }
  int component_of(int agent) const { return component_of_agent_[agent]; }
  // Agents of a component in ascending order.
  const std::vector<int>& component_agents(int component) const {
    return components_[component];
  }
  // Chores touched by a component, ascending.
  const std::vector<int>& component_chores(int component) const {
    return component_chores_[component];
  }
  int anchor(int component) const { return components_[component].front(); }
  const Rational& anchor_influence(int agent) const {
    return anchor_influence_[agent];
  }

  // Influence of agent k on agent i; both must share a component.
  Rational influence(int i, int k) const;

 private:
  std::vector<int> component_of_agent_;
  std::vector<std::vector<int>> components_;
  std::vector<std::vector<int>> component_chores_;
  RationalVector anchor_influence_;
};

InfluenceTable Influences(const Instance& inst, const ConsumptionGraph& graph);

// Utilities of the allocation that splits each chore equally among the
// agents linked to it. Chores without any agent are left unallocated.
UtilityProfile EqualSplitUtilities(const Instance& inst,
                                   const ConsumptionGraph& graph);

enum class CandidateStatus { kPending, kCertified, kRejected };

struct CandidateProfile {
  ConsumptionGraph graph;
  UtilityProfile u;
  CandidateStatus status = CandidateStatus::kPending;
};

// The only utility profile a competitive allocation with consumption graph
// `graph` can have:
//   u_i = b_i / (sum of b over i's component)
//         * sum over k in the component of influence(i, k) * ubar_k
// where ubar is EqualSplitUtilities. Rejected at once if some u_i >= 0.
CandidateProfile CandidateUtility(const Instance& inst,
                                  const ConsumptionGraph& graph);

}  // namespace choremarket

#endif  // CHOREMARKET_RECOVER_H_

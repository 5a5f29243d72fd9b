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

#include "choremarket/recover.h"

#include <algorithm>
#include <deque>

namespace choremarket {

InfluenceTable::InfluenceTable(const Instance& inst,
                               const ConsumptionGraph& graph)
    : component_of_agent_(inst.agents(), -1),
      anchor_influence_(inst.agents()) {
  const int n = inst.agents();
  const int m = inst.chores();
  std::vector<bool> chore_seen(m, false);
  for (int root = 0; root < n; ++root) {
    if (component_of_agent_[root] >= 0) continue;
    const int id = static_cast<int>(components_.size());
    components_.emplace_back();
    component_chores_.emplace_back();
    component_of_agent_[root] = id;
    anchor_influence_[root] = 1;

    // Breadth-first over agents; chores are expanded when first reached.
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int agent = queue.front();
      queue.pop_front();
      components_[id].push_back(agent);
      for (int j = 0; j < m; ++j) {
        if (!graph.HasEdge(agent, j) || chore_seen[j]) continue;
        chore_seen[j] = true;
        component_chores_[id].push_back(j);
        for (int next = 0; next < n; ++next) {
          if (!graph.HasEdge(next, j) || component_of_agent_[next] >= 0) continue;
          component_of_agent_[next] = id;
          anchor_influence_[next] = anchor_influence_[agent] *
                                    inst.disutility(agent, j) /
                                    inst.disutility(next, j);
          queue.push_back(next);
        }
      }
    }
    std::sort(components_[id].begin(), components_[id].end());
    std::sort(component_chores_[id].begin(), component_chores_[id].end());
  }
}

Rational InfluenceTable::influence(int i, int k) const {
  return anchor_influence_[k] / anchor_influence_[i];
}

InfluenceTable Influences(const Instance& inst, const ConsumptionGraph& graph) {
  return InfluenceTable(inst, graph);
}

UtilityProfile EqualSplitUtilities(const Instance& inst,
                                   const ConsumptionGraph& graph) {
  UtilityProfile u(inst.agents());
  for (int j = 0; j < inst.chores(); ++j) {
    const int degree = graph.ChoreDegree(j);
    if (degree == 0) continue;
    for (int i = 0; i < inst.agents(); ++i) {
      if (graph.HasEdge(i, j)) u[i] += inst.value(i, j) / degree;
    }
  }
  return u;
}

CandidateProfile CandidateUtility(const Instance& inst,
                                  const ConsumptionGraph& graph) {
  const InfluenceTable table(inst, graph);
  const UtilityProfile equal_split = EqualSplitUtilities(inst, graph);
  CandidateProfile candidate{graph, UtilityProfile(inst.agents()),
                             CandidateStatus::kPending};
  for (int c = 0; c < table.component_count(); ++c) {
    const auto& members = table.component_agents(c);
    Rational budget_total = 0;
    // sum_k influence(anchor, k) * ubar_k; influence(i, k) rescales it.
    Rational anchored = 0;
    for (int k : members) {
      budget_total += inst.budget(k);
      anchored += table.anchor_influence(k) * equal_split[k];
    }
    for (int i : members) {
      candidate.u[i] = inst.budget(i) / budget_total * anchored /
                       table.anchor_influence(i);
    }
  }
  for (const auto& value : candidate.u) {
    if (sgn(value) >= 0) {
      candidate.status = CandidateStatus::kRejected;
      break;
    }
  }
  return candidate;
}

}  // namespace choremarket

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

#ifndef CHOREMARKET_MAX_FLOW_H_
#define CHOREMARKET_MAX_FLOW_H_

#include <cassert>
#include <deque>
#include <vector>

namespace choremarket {

// Shortest-augmenting-path (Edmonds-Karp) maximum flow. `Capacity` must be an
// exact ordered field type; with mpq_class every augmentation is exact.
template <typename Capacity>
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : adjacency_(nodes) {}

  int node_count() const { return static_cast<int>(adjacency_.size()); }

  // Returns the arc id; its reverse arc is id ^ 1.
  int AddArc(int from, int to, const Capacity& capacity) {
    assert(capacity >= 0);
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, Capacity(0)});
    arcs_.push_back({from, Capacity(0), Capacity(0)});
    adjacency_[from].push_back(id);
    adjacency_[to].push_back(id + 1);
    return id;
  }

  Capacity Solve(int source, int sink) {
    Capacity total = 0;
    std::vector<int> via(node_count());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source};
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        const int node = queue.front();
        queue.pop_front();
        for (int id : adjacency_[node]) {
          const Arc& arc = arcs_[id];
          if (via[arc.to] != -1 || Residual(id) <= 0) continue;
          via[arc.to] = id;
          queue.push_back(arc.to);
        }
      }
      if (via[sink] == -1) return total;

      Capacity push = Residual(via[sink]);
      for (int node = sink; node != source; node = arcs_[via[node] ^ 1].to) {
        const Capacity r = Residual(via[node]);
        if (r < push) push = r;
      }
      for (int node = sink; node != source; node = arcs_[via[node] ^ 1].to) {
        arcs_[via[node]].flow += push;
        arcs_[via[node] ^ 1].flow -= push;
      }
      total += push;
    }
  }

  const Capacity& flow(int arc_id) const { return arcs_[arc_id].flow; }

 private:
  struct Arc {
    int to;
    Capacity capacity;
    Capacity flow;
  };

  Capacity Residual(int id) const { return arcs_[id].capacity - arcs_[id].flow; }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace choremarket

#endif  // CHOREMARKET_MAX_FLOW_H_

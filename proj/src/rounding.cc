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

#include "choremarket/rounding.h"

#include <algorithm>
#include <deque>
#include <optional>

namespace choremarket {
namespace {

// A cycle as (a1, c1, a2, c2, ..., aL, cL): agent a_k and a_{k+1} (cyclic)
// both consume chore c_k.
using Cycle = std::vector<int>;

class CycleFinder {
 public:
  explicit CycleFinder(const ConsumptionGraph& graph)
      : graph_(graph),
        n_(graph.agents()),
        state_(graph.agents() + graph.chores(), 0),
        parent_(graph.agents() + graph.chores(), -1) {}

  std::optional<Cycle> Find() {
    for (int v = 0; v < n_ + graph_.chores(); ++v) {
      if (state_[v] == 0) {
        if (Visit(v, -1)) return Normalize();
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<int> Neighbours(int v) const {
    std::vector<int> out;
    if (v < n_) {
      for (int j = 0; j < graph_.chores(); ++j) {
        if (graph_.HasEdge(v, j)) out.push_back(n_ + j);
      }
    } else {
      for (int i = 0; i < n_; ++i) {
        if (graph_.HasEdge(i, v - n_)) out.push_back(i);
      }
    }
    return out;
  }

  bool Visit(int v, int from) {
    state_[v] = 1;
    parent_[v] = from;
    for (int w : Neighbours(v)) {
      if (w == from) continue;
      if (state_[w] == 1) {
        // Back edge: the tree path w -> ... -> v closes a cycle.
        for (int x = v; x != w; x = parent_[x]) found_.push_back(x);
        found_.push_back(w);
        std::reverse(found_.begin(), found_.end());
        return true;
      }
      if (state_[w] == 0 && Visit(w, v)) return true;
    }
    state_[v] = 2;
    return false;
  }

  Cycle Normalize() const {
    // Rotate so the cycle starts at an agent; convert chore ids.
    Cycle cycle = found_;
    if (cycle.front() >= n_) std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    for (std::size_t k = 1; k < cycle.size(); k += 2) cycle[k] -= n_;
    return cycle;
  }

  const ConsumptionGraph& graph_;
  int n_;
  std::vector<int> state_;
  std::vector<int> parent_;
  std::vector<int> found_;
};

Cycle Reversed(const Cycle& cycle) {
  // (a1, c1, ..., aL, cL) -> (a1, cL, aL, ..., c2, a2, c1).
  Cycle out{cycle.front()};
  for (std::size_t k = cycle.size() - 1; k >= 1; --k) out.push_back(cycle[k]);
  return out;
}

}  // namespace

Allocation Acyclicize(const Instance& inst, const Allocation& z) {
  Allocation current = z;
  while (true) {
    const ConsumptionGraph graph = ConsumptionGraphOf(current);
    std::optional<Cycle> found = CycleFinder(graph).Find();
    if (!found) break;
    Cycle cycle = *found;
    const int length = static_cast<int>(cycle.size()) / 2;
    auto agent = [&](const Cycle& c, int k) { return c[(2 * k) % c.size()]; };
    auto chore = [&](const Cycle& c, int k) { return c[2 * k + 1]; };

    std::vector<int> path(cycle.begin(), cycle.end());
    path.push_back(cycle.front());
    if (PathProduct(inst, path) != 1) {
      throw NotParetoOptimal("consumption graph has a cycle with product " +
                             ToString(PathProduct(inst, path)));
    }

    // Smallest share on the cycle; ties go to the first edge in cycle order.
    bool shrink_forward = true;
    std::optional<Rational> smallest;
    for (int k = 0; k < length; ++k) {
      const Rational& outgoing = current(agent(cycle, k), chore(cycle, k));
      const Rational& incoming = current(agent(cycle, k + 1), chore(cycle, k));
      if (!smallest || outgoing < *smallest) {
        smallest = outgoing;
        shrink_forward = true;
      }
      if (incoming < *smallest) {
        smallest = incoming;
        shrink_forward = false;
      }
    }
    if (!shrink_forward) cycle = Reversed(cycle);

    // Agent a_k hands eps_k of c_k to a_{k+1}; a_{k+1} stays indifferent
    // when v[a_{k+1}][c_k] eps_k = v[a_{k+1}][c_{k+1}] eps_{k+1}.
    std::vector<Rational> eps(length);
    eps[0] = 1;
    for (int k = 0; k + 1 < length; ++k) {
      const int next = agent(cycle, k + 1);
      eps[k + 1] = eps[k] * inst.value(next, chore(cycle, k)) /
                   inst.value(next, chore(cycle, k + 1));
    }
    Rational step = current(agent(cycle, 0), chore(cycle, 0)) / eps[0];
    for (int k = 1; k < length; ++k) {
      Rational limit = current(agent(cycle, k), chore(cycle, k)) / eps[k];
      if (limit < step) step = limit;
    }
    for (int k = 0; k < length; ++k) {
      const Rational moved = step * eps[k];
      current(agent(cycle, k), chore(cycle, k)) -= moved;
      current(agent(cycle, k + 1), chore(cycle, k)) += moved;
    }
  }
  if (UtilityOf(inst, current) != UtilityOf(inst, z)) {
    throw std::logic_error("cycle removal changed utilities");
  }
  return current;
}

std::vector<int> IndivisibleAllocation::Bundle(int agent) const {
  std::vector<int> bundle;
  for (int j = 0; j < static_cast<int>(owner.size()); ++j) {
    if (owner[j] == agent) bundle.push_back(j);
  }
  return bundle;
}

Allocation ToAllocation(const IndivisibleAllocation& alloc, int agents) {
  Allocation z(agents, static_cast<int>(alloc.owner.size()), Rational(0));
  for (int j = 0; j < static_cast<int>(alloc.owner.size()); ++j) {
    z(alloc.owner[j], j) = 1;
  }
  return z;
}

IndivisibleAllocation RoundToIntegral(const Instance& inst,
                                      const Allocation& z_acyc,
                                      const PriceVector& p,
                                      const RationalVector& budgets) {
  const int n = inst.agents();
  const int m = inst.chores();
  const ConsumptionGraph graph = ConsumptionGraphOf(z_acyc);
  if (!graph.IsAcyclic()) {
    throw std::invalid_argument("rounding needs an acyclic consumption graph");
  }

  // Orient each tree away from its lowest-index agent.
  std::vector<int> parent_of_chore(m, -1);
  std::vector<std::vector<int>> child_chores(n), child_agents(m);
  std::vector<bool> agent_seen(n, false), chore_seen(m, false);
  std::vector<int> roots;
  for (int root = 0; root < n; ++root) {
    if (agent_seen[root]) continue;
    roots.push_back(root);
    agent_seen[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int j = 0; j < m; ++j) {
        if (!graph.HasEdge(a, j) || chore_seen[j]) continue;
        chore_seen[j] = true;
        parent_of_chore[j] = a;
        child_chores[a].push_back(j);
        for (int b = 0; b < n; ++b) {
          if (b == a || !graph.HasEdge(b, j) || agent_seen[b]) continue;
          agent_seen[b] = true;
          child_agents[j].push_back(b);
          queue.push_back(b);
        }
      }
    }
  }

  IndivisibleAllocation out;
  out.owner.assign(m, -1);
  std::vector<bool> chore_done(m, false);
  std::vector<Rational> spent(n, Rational(0));
  auto give = [&](int j, int i) {
    out.owner[j] = i;
    spent[i] += p[j];
    chore_done[j] = true;
  };

  // (i) Chores with a single consumer.
  for (int j = 0; j < m; ++j) {
    if (graph.ChoreDegree(j) == 1) give(j, parent_of_chore[j]);
  }

  // (ii)-(iii) Roots in breadth-first order.
  std::deque<int> pending(roots.begin(), roots.end());
  while (!pending.empty()) {
    const int i = pending.front();
    pending.pop_front();
    std::vector<int> open;
    for (int j : child_chores[i]) {
      if (!chore_done[j]) open.push_back(j);
    }
    std::stable_sort(open.begin(), open.end(), [&](int x, int y) {
      return abs(p[x]) < abs(p[y]);
    });
    for (int j : open) {
      if (p[j] + spent[i] < budgets[i]) break;
      give(j, i);
    }
    for (int j : child_chores[i]) {
      if (!chore_done[j]) give(j, child_agents[j].front());
      for (int child : child_agents[j]) pending.push_back(child);
    }
  }

  for (int j = 0; j < m; ++j) {
    if (out.owner[j] < 0) {
      throw std::logic_error("rounding left chore " + std::to_string(j + 1) +
                             " unassigned");
    }
  }
  out.b_prime = std::move(spent);
  return out;
}

bool BudgetsClose(const IndivisibleAllocation& alloc, const PriceVector& p,
                  const RationalVector& budgets) {
  Rational largest = 0;
  for (const auto& price : p) largest = std::max<Rational>(largest, abs(price));
  for (int i = 0; i < static_cast<int>(budgets.size()); ++i) {
    const std::vector<int> bundle = alloc.Bundle(i);
    const Rational& b = budgets[i];
    const Rational& b_prime = alloc.b_prime[i];
    Rational sum = 0;
    for (int j : bundle) sum += p[j];
    if (sum != b_prime) return false;
    if (bundle.empty()) {
      if (sgn(b_prime) != 0 || !(b < 0) || !(b + largest > 0)) return false;
      continue;
    }
    Rational own_largest = 0;
    for (int j : bundle) own_largest = std::max<Rational>(own_largest, abs(p[j]));
    if (b - own_largest > b_prime || b_prime > b + largest) return false;
  }
  return true;
}

bool IsMpbConsistent(const Instance& inst, const IndivisibleAllocation& alloc,
                     const PriceVector& p) {
  for (int j = 0; j < inst.chores(); ++j) {
    const int i = alloc.owner[j];
    const Rational ratio = inst.value(i, j) / p[j];
    for (int c = 0; c < inst.chores(); ++c) {
      if (inst.value(i, c) / p[c] < ratio) return false;
    }
  }
  return true;
}

namespace {

Rational BundleUtility(const Instance& inst, int agent,
                       const std::vector<int>& bundle) {
  Rational total = 0;
  for (int j : bundle) total += inst.value(agent, j);
  return total;
}

}  // namespace

bool CheckEf11(const Instance& inst, const IndivisibleAllocation& alloc,
               const RationalVector& weights) {
  const int n = inst.agents();
  const int m = inst.chores();
  for (int i = 0; i < n; ++i) {
    const std::vector<int> own = alloc.Bundle(i);
    if (own.empty()) continue;
    const Rational own_total = BundleUtility(inst, i, own);
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      const std::vector<int> other = alloc.Bundle(k);
      const Rational other_total = BundleUtility(inst, i, other);
      bool witnessed = false;
      for (int j : own) {
        const Rational lhs = (own_total - inst.value(i, j)) / weights[i];
        for (int extra = 0; extra < m && !witnessed; ++extra) {
          // Adding a chore the other agent already holds leaves the set as is.
          const bool held = alloc.owner[extra] == k;
          const Rational rhs =
              (held ? other_total : other_total + inst.value(i, extra)) /
              weights[k];
          witnessed = lhs >= rhs;
        }
        if (witnessed) break;
      }
      if (!witnessed) return false;
    }
  }
  return true;
}

bool CheckProp1(const Instance& inst, const IndivisibleAllocation& alloc,
                const RationalVector& weights) {
  Rational weight_total = 0;
  for (const auto& w : weights) weight_total += w;
  for (int i = 0; i < inst.agents(); ++i) {
    const std::vector<int> own = alloc.Bundle(i);
    if (own.empty()) continue;
    Rational everything = 0;
    for (int j = 0; j < inst.chores(); ++j) everything += inst.value(i, j);
    const Rational share = weights[i] / weight_total * everything;
    const Rational own_total = BundleUtility(inst, i, own);
    bool witnessed = false;
    for (int j : own) {
      if (own_total - inst.value(i, j) >= share) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

SolveOptions DefaultRoundingOptions() {
  SolveOptions options;
  options.enumeration.realizable_only = true;
  options.enumeration.skip_isolated_rows = true;
  return options;
}

FairRounding RoundFair(const Instance& inst, const RationalVector& weights,
                       const SolveOptions& options) {
  if (static_cast<int>(weights.size()) != inst.agents()) {
    throw std::invalid_argument("weight vector length mismatch");
  }
  RationalVector budgets;
  for (const auto& w : weights) {
    if (sgn(w) <= 0) throw std::invalid_argument("weights must be positive");
    budgets.push_back(-w);
  }
  const Instance market = inst.WithBudgets(budgets);
  const SolutionSet solution = SolveAll(market, options);
  if (solution.outcomes.empty()) {
    throw std::logic_error("no competitive allocation found");
  }
  const CompetitiveOutcome& outcome = solution.outcomes.front();

  FairRounding result;
  result.p = outcome.p;
  result.budgets = budgets;
  result.divisible = Acyclicize(market, outcome.z);
  result.allocation =
      RoundToIntegral(market, result.divisible, outcome.p, budgets);
  result.ef11 = CheckEf11(market, result.allocation, weights);
  result.prop1 = CheckProp1(market, result.allocation, weights);
  result.budgets_close = BudgetsClose(result.allocation, result.p, budgets);
  result.pareto_optimal = IsParetoOptimal(
      market, ToAllocation(result.allocation, market.agents()));
  return result;
}

}  // namespace choremarket

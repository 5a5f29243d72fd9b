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

#include "choremarket/core.h"

#include <functional>
#include <string>
#include <utility>

namespace choremarket {

Instance::Instance(Matrix<Rational> values, RationalVector budgets)
    : values_(std::move(values)), budgets_(std::move(budgets)) {
  if (values_.rows() < 1 || values_.cols() < 1) {
    throw InstanceError("instance needs at least one agent and one chore");
  }
  if (static_cast<int>(budgets_.size()) != values_.rows()) {
    throw InstanceError("budget vector has " + std::to_string(budgets_.size()) +
                        " entries, expected " + std::to_string(values_.rows()));
  }
  disutilities_ = Matrix<Rational>(values_.rows(), values_.cols());
  for (int i = 0; i < values_.rows(); ++i) {
    if (sgn(budgets_[i]) >= 0) {
      throw InstanceError("budget of agent " + std::to_string(i + 1) +
                          " is not strictly negative");
    }
    for (int j = 0; j < values_.cols(); ++j) {
      if (sgn(values_(i, j)) >= 0) {
        throw InstanceError("value of agent " + std::to_string(i + 1) +
                            " for chore " + std::to_string(j + 1) +
                            " is not strictly negative");
      }
      disutilities_(i, j) = -values_(i, j);
    }
  }
}

Instance Instance::FromRows(const std::vector<RationalVector>& rows,
                            RationalVector budgets) {
  if (rows.empty() || rows.front().empty()) {
    throw InstanceError("instance needs at least one agent and one chore");
  }
  Matrix<Rational> values(static_cast<int>(rows.size()),
                          static_cast<int>(rows.front().size()));
  for (int i = 0; i < values.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != values.cols()) {
      throw InstanceError("value rows have different lengths");
    }
    for (int j = 0; j < values.cols(); ++j) values(i, j) = rows[i][j];
  }
  return Instance(std::move(values), std::move(budgets));
}

PreparedInstance ValidateInstance(const RawInstance& raw) {
  const int n = static_cast<int>(raw.values.size());
  if (n == 0) throw InstanceError("instance has no agents");
  const int m = static_cast<int>(raw.values.front().size());
  if (m == 0) throw InstanceError("instance has no chores");
  for (const auto& row : raw.values) {
    if (static_cast<int>(row.size()) != m) {
      throw InstanceError("value rows have different lengths");
    }
  }
  if (static_cast<int>(raw.budgets.size()) != n) {
    throw InstanceError("budget vector has " +
                        std::to_string(raw.budgets.size()) +
                        " entries, expected " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (sgn(raw.budgets[i]) >= 0) {
      throw InstanceError("budget of agent " + std::to_string(i + 1) +
                          " is not strictly negative");
    }
    for (int j = 0; j < m; ++j) {
      if (sgn(raw.values[i][j]) > 0) {
        throw InstanceError("value of agent " + std::to_string(i + 1) +
                            " for chore " + std::to_string(j + 1) +
                            " is positive");
      }
    }
  }

  std::vector<Preassignment> preassigned;
  std::vector<int> residual;
  for (int j = 0; j < m; ++j) {
    int indifferent = -1;
    for (int i = 0; i < n && indifferent < 0; ++i) {
      if (sgn(raw.values[i][j]) == 0) indifferent = i;
    }
    if (indifferent >= 0) {
      preassigned.push_back({j, indifferent});
    } else {
      residual.push_back(j);
    }
  }
  if (residual.empty()) {
    throw InstanceError(
        "every chore has a zero value for some agent; nothing left to price");
  }
  Matrix<Rational> values(n, static_cast<int>(residual.size()));
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < static_cast<int>(residual.size()); ++r) {
      values(i, r) = raw.values[i][residual[r]];
    }
  }
  return PreparedInstance{Instance(std::move(values), raw.budgets),
                          std::move(preassigned), std::move(residual), m};
}

ConsumptionGraph ConsumptionGraph::Complete(int agents, int chores) {
  ConsumptionGraph g(agents, chores);
  std::fill(g.edges_.begin(), g.edges_.end(), 1);
  return g;
}

int ConsumptionGraph::AgentDegree(int agent) const {
  int degree = 0;
  for (int j = 0; j < chores_; ++j) degree += HasEdge(agent, j);
  return degree;
}

int ConsumptionGraph::ChoreDegree(int chore) const {
  int degree = 0;
  for (int i = 0; i < agents_; ++i) degree += HasEdge(i, chore);
  return degree;
}

int ConsumptionGraph::EdgeCount() const {
  int count = 0;
  for (auto e : edges_) count += e;
  return count;
}

bool ConsumptionGraph::IsSubgraphOf(const ConsumptionGraph& other) const {
  if (agents_ != other.agents_ || chores_ != other.chores_) return false;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k] && !other.edges_[k]) return false;
  }
  return true;
}

bool ConsumptionGraph::IsAcyclic() const {
  // A graph is a forest iff |E| = |V| - (number of components).
  std::vector<int> parent(agents_ + chores_);
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = static_cast<int>(v);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < agents_; ++i) {
    for (int j = 0; j < chores_; ++j) {
      if (!HasEdge(i, j)) continue;
      int a = find(i), b = find(agents_ + j);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

ConsumptionGraph ConsumptionGraph::Transposed() const {
  ConsumptionGraph t(chores_, agents_);
  for (int i = 0; i < agents_; ++i) {
    for (int j = 0; j < chores_; ++j) t.SetEdge(j, i, HasEdge(i, j));
  }
  return t;
}

std::string ConsumptionGraph::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < agents_; ++i) {
    for (int j = 0; j < chores_; ++j) {
      if (!HasEdge(i, j)) continue;
      if (!first) out += ",";
      first = false;
      out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
  }
  return out + "}";
}

bool IsFeasible(const Instance& inst, const Allocation& z) {
  if (z.rows() != inst.agents() || z.cols() != inst.chores()) return false;
  for (int j = 0; j < z.cols(); ++j) {
    Rational total = 0;
    for (int i = 0; i < z.rows(); ++i) {
      if (sgn(z(i, j)) < 0) return false;
      total += z(i, j);
    }
    if (total != 1) return false;
  }
  return true;
}

UtilityProfile UtilityOf(const Instance& inst, const Allocation& z) {
  UtilityProfile u(inst.agents());
  for (int i = 0; i < inst.agents(); ++i) {
    for (int j = 0; j < inst.chores(); ++j) {
      if (sgn(z(i, j)) != 0) u[i] += inst.value(i, j) * z(i, j);
    }
  }
  return u;
}

ConsumptionGraph ConsumptionGraphOf(const Allocation& z) {
  ConsumptionGraph g(z.rows(), z.cols());
  for (int i = 0; i < z.rows(); ++i) {
    for (int j = 0; j < z.cols(); ++j) g.SetEdge(i, j, sgn(z(i, j)) > 0);
  }
  return g;
}

Rational PathProduct(const Instance& inst, std::span<const int> path) {
  if (path.size() < 3 || path.size() % 2 == 0) {
    throw std::invalid_argument(
        "path must alternate agent, chore, agent, ... and end at an agent");
  }
  for (std::size_t k = 0; k < path.size(); ++k) {
    const int limit = (k % 2 == 0) ? inst.agents() : inst.chores();
    if (path[k] < 0 || path[k] >= limit) {
      throw std::invalid_argument("path index out of range at position " +
                                  std::to_string(k));
    }
  }
  Rational product = 1;
  for (std::size_t k = 1; k < path.size(); k += 2) {
    const int chore = path[k];
    product *= inst.disutility(path[k - 1], chore);
    product /= inst.disutility(path[k + 1], chore);
  }
  return product;
}

bool HasProfitableCycle(const Instance& inst, const ConsumptionGraph& graph) {
  // Multiplicative Bellman-Ford for a cycle of product > 1. Vertices: agents
  // 0..n-1, chores n..n+m-1. Arc i -> j (weight |v_ij|) iff (i, j) is an
  // edge; arc j -> k (weight 1 / |v_kj|) always.
  const int n = inst.agents();
  const int m = inst.chores();
  struct Arc {
    int from, to;
    Rational weight;
  };
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (graph.HasEdge(i, j)) arcs.push_back({i, n + j, inst.disutility(i, j)});
      arcs.push_back({n + j, i, Rational(1) / inst.disutility(i, j)});
    }
  }
  std::vector<Rational> best(n + m, Rational(1));
  Rational candidate;
  for (int round = 0; round < n + m; ++round) {
    bool changed = false;
    for (const Arc& arc : arcs) {
      candidate = best[arc.from] * arc.weight;
      if (candidate > best[arc.to]) {
        best[arc.to] = candidate;
        changed = true;
      }
    }
    if (!changed) return false;
  }
  return true;
}

bool IsParetoOptimal(const Instance& inst, const Allocation& z) {
  return !HasProfitableCycle(inst, ConsumptionGraphOf(z));
}

bool IsWeightedEnvyFree(const Instance& inst, const Allocation& z,
                        const RationalVector& weights) {
  const int n = inst.agents();
  for (int i = 0; i < n; ++i) {
    Rational own = 0;
    for (int j = 0; j < inst.chores(); ++j) own += inst.value(i, j) * z(i, j);
    own /= weights[i];
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      Rational other = 0;
      for (int j = 0; j < inst.chores(); ++j) {
        other += inst.value(i, j) * z(k, j);
      }
      other /= weights[k];
      if (own < other) return false;
    }
  }
  return true;
}

namespace {

class UnitCycleSearch {
 public:
  explicit UnitCycleSearch(const Instance& inst)
      : inst_(inst),
        agent_used_(inst.agents(), false),
        chore_used_(inst.chores(), false) {}

  bool Run() {
    for (int start = 0; start + 1 < inst_.agents(); ++start) {
      start_ = start;
      agent_used_[start] = true;
      if (Extend(start, Rational(1), 0)) return true;
      agent_used_[start] = false;
    }
    return false;
  }

 private:
  // Walks start -> ... -> agent; `length` chores used so far. Agents other
  // than the start must have a larger index, so each cycle is found from its
  // lowest agent.
  bool Extend(int agent, const Rational& product, int length) {
    for (int j = 0; j < inst_.chores(); ++j) {
      if (chore_used_[j]) continue;
      chore_used_[j] = true;
      Rational through = product * inst_.disutility(agent, j);
      if (length >= 1) {
        Rational closed = through / inst_.disutility(start_, j);
        if (closed == 1) return true;
      }
      for (int next = start_ + 1; next < inst_.agents(); ++next) {
        if (agent_used_[next]) continue;
        agent_used_[next] = true;
        Rational moved = through / inst_.disutility(next, j);
        bool found = Extend(next, moved, length + 1);
        agent_used_[next] = false;
        if (found) return true;
      }
      chore_used_[j] = false;
    }
    return false;
  }

  const Instance& inst_;
  std::vector<bool> agent_used_;
  std::vector<bool> chore_used_;
  int start_ = 0;
};

}  // namespace

bool IsDegenerate(const Instance& inst, std::uint64_t cycle_cap) {
  const int n = inst.agents();
  const int m = inst.chores();
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(n) * m,
                static_cast<unsigned long>(std::min(n, m)));
  if (bound > mpz_class(std::to_string(cycle_cap))) {
    throw CapExceeded("degeneracy check would inspect up to " +
                      bound.get_str() + " cycles (cap " +
                      std::to_string(cycle_cap) + ")");
  }
  if (n < 2 || m < 2) return false;
  return UnitCycleSearch(inst).Run();
}

}  // namespace choremarket

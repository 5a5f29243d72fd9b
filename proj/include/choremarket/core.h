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

#ifndef CHOREMARKET_CORE_H_
#define CHOREMARKET_CORE_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "choremarket/matrix.h"
#include "choremarket/rational.h"

namespace choremarket {

class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured enumeration limit (cycles, graphs) would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Allocation = Matrix<Rational>;
using UtilityProfile = RationalVector;
using PriceVector = RationalVector;

// A chore division problem: values v[i][j] < 0 for one unit of chore j and
// budgets b[i] < 0. Agents and chores are 0-indexed.
class Instance {
 public:
  // Throws InstanceError unless n, m >= 1 and every value and budget is
  // strictly negative.
  Instance(Matrix<Rational> values, RationalVector budgets);

  static Instance FromRows(const std::vector<RationalVector>& rows,
                           RationalVector budgets);

  int agents() const { return values_.rows(); }
  int chores() const { return values_.cols(); }

  const Rational& value(int agent, int chore) const {
    return values_(agent, chore);
  }
  // |v[i][j]|
  const Rational& disutility(int agent, int chore) const {
    return disutilities_(agent, chore);
  }
  const Rational& budget(int agent) const { return budgets_[agent]; }

  const Matrix<Rational>& values() const { return values_; }
  const Matrix<Rational>& disutilities() const { return disutilities_; }
  const RationalVector& budgets() const { return budgets_; }

  Instance WithBudgets(RationalVector budgets) const {
    return Instance(values_, std::move(budgets));
  }

 private:
  Matrix<Rational> values_;
  Matrix<Rational> disutilities_;
  RationalVector budgets_;
};

// Unvalidated input as read from a file.
struct RawInstance {
  std::vector<RationalVector> values;
  RationalVector budgets;
};

// A chore some agent values at zero; it is handed to that agent at price 0.
struct Preassignment {
  int chore = 0;  // index in the original instance
  int agent = 0;
  bool operator==(const Preassignment&) const = default;
};

struct PreparedInstance {
  Instance instance;                       // residual, strictly negative
  std::vector<Preassignment> preassigned;  // zero-valued chores
  std::vector<int> residual_chores;        // residual index -> original index
  int original_chores = 0;
};

// Checks dimensions and signs, then strips chores with a zero value for some
// agent (each goes to the lowest-index agent indifferent to it). Throws
// InstanceError on malformed or wrongly signed input, and when no chore
// remains after stripping.
PreparedInstance ValidateInstance(const RawInstance& raw);

// Bipartite agent-chore adjacency.
class ConsumptionGraph {
 public:
  ConsumptionGraph() = default;
  ConsumptionGraph(int agents, int chores)
      : agents_(agents), chores_(chores),
        edges_(static_cast<std::size_t>(agents) * chores, 0) {}

  static ConsumptionGraph Complete(int agents, int chores);

  int agents() const { return agents_; }
  int chores() const { return chores_; }

  bool HasEdge(int agent, int chore) const {
    return edges_[static_cast<std::size_t>(agent) * chores_ + chore] != 0;
  }
  void SetEdge(int agent, int chore, bool present = true) {
    edges_[static_cast<std::size_t>(agent) * chores_ + chore] = present ? 1 : 0;
  }

  int AgentDegree(int agent) const;
  int ChoreDegree(int chore) const;
  int EdgeCount() const;

  bool IsSubgraphOf(const ConsumptionGraph& other) const;
  // True iff the underlying undirected bipartite graph is a forest.
  bool IsAcyclic() const;
  ConsumptionGraph Transposed() const;

  // 1-indexed edge list, e.g. "{(1,1),(1,2),(2,2)}".
  std::string ToString() const;

  auto operator<=>(const ConsumptionGraph&) const = default;

 private:
  int agents_ = 0;
  int chores_ = 0;
  std::vector<std::uint8_t> edges_;
};

// Shares are non-negative and every chore is fully allocated.
bool IsFeasible(const Instance& inst, const Allocation& z);

UtilityProfile UtilityOf(const Instance& inst, const Allocation& z);

ConsumptionGraph ConsumptionGraphOf(const Allocation& z);

// Product of |v[i_k][j_k]| / |v[i_{k+1}][j_k]| along an alternating
// agent/chore/agent/... sequence. Throws std::invalid_argument if the path is
// not of the form (i1, j1, i2, ..., jL, iL+1) with L >= 1.
Rational PathProduct(const Instance& inst, std::span<const int> path);

// True iff the graph contains a trading cycle with product > 1: agent i may
// pass chore j on to any agent only if (i, j) is an edge.
bool HasProfitableCycle(const Instance& inst, const ConsumptionGraph& graph);

bool IsParetoOptimal(const Instance& inst, const Allocation& z);

// u_i(z_i) / w_i >= u_i(z_k) / w_k for every ordered pair (i, k).
bool IsWeightedEnvyFree(const Instance& inst, const Allocation& z,
                        const RationalVector& weights);

inline constexpr std::uint64_t kDefaultCycleCap = 10'000'000;

// True iff some simple cycle of the complete bipartite graph has product
// exactly 1. Throws CapExceeded when (nm)^min(n,m) exceeds `cycle_cap`.
bool IsDegenerate(const Instance& inst,
                  std::uint64_t cycle_cap = kDefaultCycleCap);

}  // namespace choremarket

#endif  // CHOREMARKET_CORE_H_

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

#ifndef CHOREMARKET_GRAPHS_H_
#define CHOREMARKET_GRAPHS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "choremarket/core.h"

namespace choremarket {

// Two-agent maximal weighted welfare graphs. Chores are sorted by the ratio
// |v[0][j]| / |v[1][j]| (ties by index). A split(k) gives the first k sorted
// chores to agent 0 and the rest to agent 1; a cut(k) shares every chore
// whose ratio equals the k-th ratio and splits the others around it.
enum class PairGraphKind { kSplit, kCut };

struct TwoAgentGraph {
  PairGraphKind kind = PairGraphKind::kSplit;
  int k = 0;
  ConsumptionGraph edges;  // 2 agents x m chores

  std::string Label() const;
};

// All distinct MWW graphs of a 2 x m strictly negative value matrix, in the
// order split(0), cut(1), split(1), cut(2), ... with invalid splits and
// repeated cuts (equal ratios) dropped. At most 2m + 1 entries.
std::vector<TwoAgentGraph> TwoAgentMww(const Matrix<Rational>& pair_values);

using WeightVector = RationalVector;

// Edge (i, j) iff tau[i] |v[i][j]| <= tau[k] |v[k][j]| for every agent k.
ConsumptionGraph MwwGraphForWeights(const Matrix<Rational>& values,
                                    const WeightVector& tau);
ConsumptionGraph MwwGraphForWeights(const Instance& inst,
                                    const WeightVector& tau);

// False (discard) if some agent or chore is isolated. With
// `drop_inefficient`, also discards graphs that admit a profitable trading
// cycle.
bool KeepGraph(const ConsumptionGraph& graph);
bool KeepGraph(const Instance& inst, const ConsumptionGraph& graph,
               bool drop_inefficient);

enum class EnumerationMode { kDirect, kDual, kAuto };

std::string ToString(EnumerationMode mode);
EnumerationMode ParseEnumerationMode(const std::string& text);

// Picks whichever of (2m+1)^(n(n-1)/2) and (2n+1)^(m(m-1)/2) is smaller;
// direct on a tie. Never returns kAuto.
EnumerationMode ResolveMode(EnumerationMode mode, int agents, int chores);

// (2m+1)^(n(n-1)/2): stream length bound for direct enumeration.
mpz_class DirectFamilyBound(int agents, int chores);
// (2n+1)^(m(m-1)/2): stream length bound for the dual enumeration.
mpz_class DualFamilyBound(int agents, int chores);

namespace internal {

// Transitive closure of multiplicative constraints tau_to <= w * tau_from
// (optionally strict) over positive weights.
class WeightSystem {
 public:
  explicit WeightSystem(int size);
  // Adds a constraint; returns false if the system became infeasible.
  bool Add(int from, int to, const Rational& w, bool strict);

 private:
  struct Bound {
    bool finite = false;
    Rational w;
    bool strict = false;
  };
  Bound& at(int from, int to) { return bounds_[from * size_ + to]; }

  int size_;
  std::vector<Bound> bounds_;
};

}  // namespace internal

struct EnumerationOptions {
  // Skip pair-graph combinations that no single weight vector realizes, so
  // the stream is exactly the MWW family (with repeats). Off by default.
  bool realizable_only = false;
  // Cut off every combination in which some row of the enumerated matrix
  // (an agent, or a chore in dual mode) has lost all its edges. Such graphs
  // are discarded by KeepGraph anyway, so solver output is unchanged, but
  // they no longer appear in the stream or its counts. Off by default.
  bool skip_isolated_rows = false;
};

// The superset family built from per-pair MWW graphs: for every choice of
// one two-agent graph per agent pair, agent i keeps chore j iff every pair
// graph involving i links them. Combinations are streamed lazily in
// lexicographic order of pair-graph indices, pairs ordered (0,1), (0,2), ...,
// (1,2), ...
//
// In dual mode the family is built on the transposed matrix, each graph is
// transposed back and graphs with an isolated agent or chore are skipped.
class RichFamily {
 public:
  RichFamily(const Matrix<Rational>& values, EnumerationMode mode,
             EnumerationOptions options = {});

  EnumerationMode mode() const { return mode_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  // Number of choices for the first pair (1 when there are no pairs); the
  // unit of work partitioning.
  int first_level_size() const;
  const std::vector<TwoAgentGraph>& pair_graphs(int pair) const;
  mpz_class combination_count() const;

  class Stream {
   public:
    // Writes the next graph and returns true, or returns false at the end.
    bool Next(ConsumptionGraph& out);
    // Graphs produced by the underlying combination enumeration, including
    // dual-mode graphs later skipped for isolated vertices.
    std::uint64_t enumerated() const { return enumerated_; }
    // Pair-graph indices of the most recent graph.
    const std::vector<int>& choice() const { return digits_; }

   private:
    friend class RichFamily;
    Stream(const RichFamily* family, int first_begin, int first_end);
    bool Advance();
    bool ApplyLevel(int level);

    const RichFamily* family_;
    int first_begin_;
    int first_end_;
    int level_ = 0;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> digits_;
    std::vector<std::vector<std::uint64_t>> masks_;  // per level, n x words
    std::vector<internal::WeightSystem> systems_;  // per level
    std::uint64_t enumerated_ = 0;
  };

  Stream Enumerate() const;
  // Only combinations whose first-pair index lies in [first_begin, first_end).
  Stream Enumerate(int first_begin, int first_end) const;

 private:
  struct Pair {
    int a, b;
    std::vector<TwoAgentGraph> graphs;
    // Per graph: chore bitmasks of agent a and agent b.
    std::vector<std::vector<std::uint64_t>> mask_a, mask_b;
    // Per graph: realizing interval for tau_b / tau_a.
    struct Interval {
      Rational lower, upper;
      bool has_lower, has_upper, strict;
    };
    std::vector<Interval> intervals;
  };

  EnumerationMode mode_;
  EnumerationOptions options_;
  int agents_;  // of the enumerated (possibly transposed) matrix
  int chores_;
  int words_;
  std::vector<Pair> pairs_;
};

RichFamily EnumerateRichFamily(const Instance& inst,
                               EnumerationOptions options = {});
RichFamily EnumerateRichFamilyDual(const Instance& inst,
                                   EnumerationOptions options = {});

// Drains a stream; for tests and small instances.
std::vector<ConsumptionGraph> CollectGraphs(const RichFamily& family);

}  // namespace choremarket

#endif  // CHOREMARKET_GRAPHS_H_

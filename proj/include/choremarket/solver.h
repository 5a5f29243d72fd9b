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

#ifndef CHOREMARKET_SOLVER_H_
#define CHOREMARKET_SOLVER_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "choremarket/certify.h"
#include "choremarket/core.h"
#include "choremarket/graphs.h"

namespace choremarket {

struct SolveOptions {
  EnumerationMode mode = EnumerationMode::kAuto;
  EnumerationOptions enumeration;
  // Also discard graphs admitting a profitable trading cycle before
  // computing candidates.
  bool drop_inefficient = false;
  // Worker threads; values < 1 mean 1. Output does not depend on it.
  int threads = 1;
};

struct SolveStats {
  std::uint64_t graphs_enumerated = 0;
  std::uint64_t graphs_pruned = 0;
  std::uint64_t rejected_nonnegative = 0;
  std::uint64_t rejected_sum_mismatch = 0;
  std::uint64_t rejected_flow_deficit = 0;
  std::uint64_t certified = 0;  // distinct certifications before merging
  std::uint64_t duplicate_candidates = 0;

  bool operator==(const SolveStats&) const = default;
};

// All competitive utility profiles, sorted lexicographically, each with the
// outcome certified first in enumeration order.
struct SolutionSet {
  std::vector<UtilityProfile> profiles;
  std::vector<CompetitiveOutcome> outcomes;
  SolveStats stats;
  EnumerationMode mode = EnumerationMode::kDirect;
};

SolutionSet SolveAll(const Instance& inst, const SolveOptions& options = {});

// (g, u) does not determine a feasible allocation.
class NotRealizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reconstructs the allocation with utility profile u whose consumption graph
// lies inside the forest g by repeatedly resolving degree-1 vertices. Throws
// NotRealizable when peeling gets stuck or produces an impossible share.
Allocation LeafPeel(const Instance& inst, const ConsumptionGraph& graph,
                    const UtilityProfile& u);

struct AllAllocationsResult {
  bool degenerate = false;
  // One allocation per profile of the solution set, in the same order. Empty
  // when degenerate.
  std::vector<Allocation> allocations;
  std::string explanation;  // set when refused
};

// For a non-degenerate instance every competitive profile has exactly one
// allocation; returns them. Refuses for degenerate instances. Throws
// CapExceeded when the degeneracy check is too large.
AllAllocationsResult AllAllocations(const Instance& inst,
                                    const SolutionSet& solution,
                                    std::uint64_t cycle_cap = kDefaultCycleCap);

}  // namespace choremarket

#endif  // CHOREMARKET_SOLVER_H_

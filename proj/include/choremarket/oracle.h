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

#ifndef CHOREMARKET_ORACLE_H_
#define CHOREMARKET_ORACLE_H_

#include <cstdint>
#include <vector>

#include "choremarket/certify.h"
#include "choremarket/core.h"

namespace choremarket {

// Ground truth for small instances, for cross-checking the solver.
struct OracleReport {
  std::vector<UtilityProfile> profiles;      // sorted lexicographically
  std::vector<CompetitiveOutcome> witnesses;  // one per profile
  std::uint64_t graphs_examined = 0;
};

inline constexpr std::uint64_t kDefaultOracleCap = std::uint64_t{1} << 20;

// Tries every one of the 2^(nm) bipartite graphs as a consumption graph.
// Throws CapExceeded if 2^(nm) > cap.
OracleReport BruteForceCu(const Instance& inst,
                          std::uint64_t cap = kDefaultOracleCap);

// Competitiveness of an allocation with no flow machinery: u(z) < 0 and
// z[i][j] > 0 implies v[i][j] b[i] / u[i] >= v[k][j] b[k] / u[k] for all k.
bool KktCheck(const Instance& inst, const Allocation& z);

}  // namespace choremarket

#endif  // CHOREMARKET_ORACLE_H_

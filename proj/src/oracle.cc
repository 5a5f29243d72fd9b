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

#include "choremarket/oracle.h"

#include <map>
#include <string>

#include "choremarket/recover.h"

namespace choremarket {

OracleReport BruteForceCu(const Instance& inst, std::uint64_t cap) {
  const int n = inst.agents();
  const int m = inst.chores();
  const int edges = n * m;
  if (edges >= 63 || (std::uint64_t{1} << edges) > cap) {
    throw CapExceeded("brute force needs 2^" + std::to_string(edges) +
                      " graphs (cap " + std::to_string(cap) + ")");
  }
  OracleReport report;
  std::map<UtilityProfile, CompetitiveOutcome> found;
  std::map<UtilityProfile, bool> tried;
  const std::uint64_t total = std::uint64_t{1} << edges;
  ConsumptionGraph graph(n, m);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (int e = 0; e < edges; ++e) graph.SetEdge(e / m, e % m, (code >> e) & 1);
    ++report.graphs_examined;
    CandidateProfile candidate = CandidateUtility(inst, graph);
    if (candidate.status == CandidateStatus::kRejected) continue;
    if (!tried.emplace(candidate.u, true).second) continue;
    CertifyResult result = CheckCompetitive(inst, candidate.u);
    if (auto* outcome = std::get_if<CompetitiveOutcome>(&result)) {
      found.emplace(candidate.u, std::move(*outcome));
    }
  }
  for (auto& [profile, outcome] : found) {
    report.profiles.push_back(profile);
    report.witnesses.push_back(std::move(outcome));
  }
  return report;
}

bool KktCheck(const Instance& inst, const Allocation& z) {
  const int n = inst.agents();
  const UtilityProfile u = UtilityOf(inst, z);
  for (const auto& value : u) {
    if (sgn(value) >= 0) return false;
  }
  for (int j = 0; j < inst.chores(); ++j) {
    for (int i = 0; i < n; ++i) {
      if (sgn(z(i, j)) <= 0) continue;
      const Rational mine = inst.value(i, j) * inst.budget(i) / u[i];
      for (int k = 0; k < n; ++k) {
        if (mine < inst.value(k, j) * inst.budget(k) / u[k]) return false;
      }
    }
  }
  return true;
}

}  // namespace choremarket

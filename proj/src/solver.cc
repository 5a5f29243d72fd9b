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

#include "choremarket/solver.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "choremarket/recover.h"

namespace choremarket {
namespace {

struct TaskResult {
  // Certified profiles in enumeration order of this task.
  std::vector<CompetitiveOutcome> outcomes;
  SolveStats stats;
};

TaskResult RunTask(const Instance& inst, const RichFamily& family,
                   int first_choice, bool drop_inefficient) {
  TaskResult result;
  SolveStats& stats = result.stats;
  // Verdict per candidate profile: nullopt means certified.
  std::map<UtilityProfile, std::optional<RejectionReason>> verdicts;

  auto stream = family.Enumerate(first_choice, first_choice + 1);
  ConsumptionGraph graph;
  while (stream.Next(graph)) {
    if (!KeepGraph(inst, graph, drop_inefficient)) {
      ++stats.graphs_pruned;
      continue;
    }
    CandidateProfile candidate = CandidateUtility(inst, graph);
    if (candidate.status == CandidateStatus::kRejected) {
      ++stats.rejected_nonnegative;
      continue;
    }
    auto known = verdicts.find(candidate.u);
    std::optional<RejectionReason> verdict;
    if (known != verdicts.end()) {
      verdict = known->second;
      if (!verdict) {
        ++stats.duplicate_candidates;
        continue;
      }
    } else {
      CertifyResult checked = CheckCompetitive(inst, candidate.u);
      if (auto* outcome = std::get_if<CompetitiveOutcome>(&checked)) {
        verdicts.emplace(candidate.u, std::nullopt);
        ++stats.certified;
        result.outcomes.push_back(std::move(*outcome));
        continue;
      }
      verdict = std::get<Rejection>(checked).reason;
      verdicts.emplace(candidate.u, verdict);
    }
    switch (*verdict) {
      case RejectionReason::kNonNegativeUtility:
        ++stats.rejected_nonnegative;
        break;
      case RejectionReason::kSumMismatch:
        ++stats.rejected_sum_mismatch;
        break;
      case RejectionReason::kFlowDeficit:
        ++stats.rejected_flow_deficit;
        break;
    }
  }
  stats.graphs_enumerated = stream.enumerated();
  return result;
}

void Accumulate(SolveStats& total, const SolveStats& part) {
  total.graphs_enumerated += part.graphs_enumerated;
  total.graphs_pruned += part.graphs_pruned;
  total.rejected_nonnegative += part.rejected_nonnegative;
  total.rejected_sum_mismatch += part.rejected_sum_mismatch;
  total.rejected_flow_deficit += part.rejected_flow_deficit;
  total.certified += part.certified;
  total.duplicate_candidates += part.duplicate_candidates;
}

}  // namespace

SolutionSet SolveAll(const Instance& inst, const SolveOptions& options) {
  const RichFamily family(inst.values(), options.mode, options.enumeration);
  const int tasks = family.first_level_size();
  std::vector<TaskResult> results(tasks);

  const int workers = std::clamp(options.threads, 1, tasks);
  if (workers == 1) {
    for (int t = 0; t < tasks; ++t) {
      results[t] = RunTask(inst, family, t, options.drop_inefficient);
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int t = next++; t < tasks; t = next++) {
          results[t] = RunTask(inst, family, t, options.drop_inefficient);
        }
      });
    }
    for (auto& thread : pool) thread.join();
  }

  // Merge in enumeration order so the first certified outcome wins.
  SolutionSet solution;
  solution.mode = family.mode();
  std::map<UtilityProfile, CompetitiveOutcome> merged;
  for (auto& result : results) {
    Accumulate(solution.stats, result.stats);
    for (auto& outcome : result.outcomes) {
      UtilityProfile key = outcome.u;
      merged.try_emplace(std::move(key), std::move(outcome));
    }
  }
  for (auto& [profile, outcome] : merged) {
    solution.profiles.push_back(profile);
    solution.outcomes.push_back(std::move(outcome));
  }
  return solution;
}

Allocation LeafPeel(const Instance& inst, const ConsumptionGraph& graph,
                    const UtilityProfile& u) {
  const int n = inst.agents();
  const int m = inst.chores();
  if (graph.agents() != n || graph.chores() != m ||
      static_cast<int>(u.size()) != n) {
    throw std::invalid_argument("graph or profile does not match the instance");
  }
  ConsumptionGraph residual = graph;
  std::vector<bool> agent_alive(n, true), chore_alive(m, true);
  std::vector<Rational> remaining(m, Rational(1));
  std::vector<Rational> assigned(n, Rational(0));
  Allocation z(n, m, Rational(0));

  auto remove_chore = [&](int j) {
    chore_alive[j] = false;
    for (int i = 0; i < n; ++i) residual.SetEdge(i, j, false);
  };
  auto remove_agent = [&](int i) {
    agent_alive[i] = false;
    for (int j = 0; j < m; ++j) residual.SetEdge(i, j, false);
  };
  auto only_neighbour_of_chore = [&](int j) {
    for (int i = 0; i < n; ++i) {
      if (residual.HasEdge(i, j)) return i;
    }
    return -1;
  };
  auto only_neighbour_of_agent = [&](int i) {
    for (int j = 0; j < m; ++j) {
      if (residual.HasEdge(i, j)) return j;
    }
    return -1;
  };

  int alive = n + m;
  while (alive > 0) {
    bool progressed = false;
    for (int j = 0; j < m && !progressed; ++j) {
      if (!chore_alive[j]) continue;
      const int degree = residual.ChoreDegree(j);
      if (degree == 0) {
        if (sgn(remaining[j]) != 0) {
          throw NotRealizable("chore " + std::to_string(j + 1) +
                              " cannot be fully allocated on the graph");
        }
      } else if (degree == 1) {
        const int i = only_neighbour_of_chore(j);
        z(i, j) += remaining[j];
        assigned[i] += inst.value(i, j) * remaining[j];
        remaining[j] = 0;
      } else {
        continue;
      }
      remove_chore(j);
      --alive;
      progressed = true;
    }
    for (int i = 0; i < n && !progressed; ++i) {
      if (!agent_alive[i]) continue;
      const int degree = residual.AgentDegree(i);
      if (degree == 0) {
        if (assigned[i] != u[i]) {
          throw NotRealizable("agent " + std::to_string(i + 1) +
                              " cannot reach the target utility");
        }
      } else if (degree == 1) {
        const int j = only_neighbour_of_agent(i);
        Rational share = (u[i] - assigned[i]) / inst.value(i, j);
        if (sgn(share) < 0 || share > remaining[j]) {
          throw NotRealizable("agent " + std::to_string(i + 1) +
                              " needs share " + ToString(share) + " of chore " +
                              std::to_string(j + 1));
        }
        z(i, j) += share;
        assigned[i] = u[i];
        remaining[j] -= share;
        if (sgn(remaining[j]) == 0) {
          remove_chore(j);
          --alive;
        }
      } else {
        continue;
      }
      remove_agent(i);
      --alive;
      progressed = true;
    }
    if (!progressed) throw NotRealizable("graph has a cycle");
  }
  if (!IsFeasible(inst, z) || UtilityOf(inst, z) != u) {
    throw NotRealizable("peeled allocation does not reproduce the profile");
  }
  return z;
}

AllAllocationsResult AllAllocations(const Instance& inst,
                                    const SolutionSet& solution,
                                    std::uint64_t cycle_cap) {
  AllAllocationsResult result;
  result.degenerate = IsDegenerate(inst, cycle_cap);
  if (result.degenerate) {
    result.explanation =
        "values admit a cycle with disutility product 1; a competitive profile "
        "can have infinitely many allocations whose extreme points may be "
        "exponentially many, so only one representative per profile is "
        "reported";
    return result;
  }
  for (const auto& outcome : solution.outcomes) {
    if (!outcome.graph.IsAcyclic()) {
      throw std::logic_error("non-degenerate instance with a cyclic outcome");
    }
    result.allocations.push_back(LeafPeel(inst, outcome.graph, outcome.u));
  }
  return result;
}

}  // namespace choremarket

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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "choremarket/certify.h"
#include "choremarket/core.h"
#include "choremarket/graphs.h"
#include "choremarket/oracle.h"
#include "choremarket/rounding.h"
#include "choremarket/solver.h"
#include "test_util.h"

namespace choremarket {
namespace {

using testing::ExampleOne;
using testing::Magnitudes;
using testing::QMatrix;
using testing::Qs;
using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Shared corpus: 500 instances, n, m uniform in 1..4, entries -p/q with
// p, q in 1..20.
struct CorpusEntry {
  Instance inst;
  SolutionSet direct;
  SolutionSet dual;
};

std::vector<CorpusEntry>& Corpus() {
  static std::vector<CorpusEntry> corpus;
  return corpus;
}

Verdict ExampleOneReproduction() {
  Verdict v;
  const auto start = Clock::now();
  SolutionSet s = SolveAll(ExampleOne());
  const double seconds = SecondsSince(start);
  if (s.profiles != std::vector<UtilityProfile>{Qs({"-3", "-3/2"}),
                                                Qs({"-1", "-2"})}) {
    v.Fail("profile set differs");
  } else {
    if (s.outcomes[1].z != QMatrix({{"1", "0"}, {"0", "1"}}) ||
        s.outcomes[1].p != Qs({"-1", "-2"})) {
      v.Fail("first equilibrium allocation/prices differ");
    }
    if (s.outcomes[0].z != QMatrix({{"1", "1/4"}, {"0", "3/4"}}) ||
        s.outcomes[0].p != Qs({"-1/3", "-8/3"})) {
      v.Fail("second equilibrium allocation/prices differ");
    }
  }
  if (seconds >= 1.0) v.Fail("took " + std::to_string(seconds) + " s");
  if (v.pass) {
    std::ostringstream d;
    d << "2 profiles, exact z and p, " << seconds << " s";
    v.detail = d.str();
  }
  return v;
}

Verdict OracleEquivalence() {
  Verdict v;
  const auto start = Clock::now();
  std::mt19937_64 rng(20260101);
  int mismatches = 0;
  for (int k = 0; k < 500; ++k) {
    Instance inst = testing::RandomSizedInstance(rng, 4, 4);
    SolveOptions direct, dual;
    direct.mode = EnumerationMode::kDirect;
    dual.mode = EnumerationMode::kDual;
    CorpusEntry entry{inst, SolveAll(inst, direct), SolveAll(inst, dual)};
    if (entry.direct.profiles != BruteForceCu(inst).profiles) {
      if (mismatches++ == 0) v.Fail("mismatch on instance " + std::to_string(k));
    }
    Corpus().push_back(std::move(entry));
  }
  const double seconds = SecondsSince(start);
  if (seconds >= 300) v.Fail("took " + std::to_string(seconds) + " s");
  std::ostringstream d;
  d << (v.pass ? "" : v.detail + "; ") << "500 instances, " << mismatches
    << " mismatches, " << seconds << " s";
  v.detail = d.str();
  return v;
}

Verdict WelfareAndFairness() {
  Verdict v;
  std::size_t outcomes = 0;
  for (const auto& entry : Corpus()) {
    const Instance& inst = entry.inst;
    for (const auto* set : {&entry.direct, &entry.dual}) {
      for (const auto& outcome : set->outcomes) {
        ++outcomes;
        if (!VerifyOutcome(inst, outcome)) v.Fail("verify_outcome failed");
        if (!IsParetoOptimal(inst, outcome.z)) v.Fail("not Pareto optimal");
        if (!IsWeightedEnvyFree(inst, outcome.z, Magnitudes(inst.budgets()))) {
          v.Fail("weighted envy");
        }
        if (!KktCheck(inst, outcome.z)) v.Fail("kkt_check failed");
      }
    }
  }
  if (Corpus().empty()) v.Fail("empty corpus");
  v.detail = (v.pass ? "" : v.detail + "; ") + std::to_string(outcomes) +
             " outcomes checked";
  return v;
}

Verdict Duality() {
  Verdict v;
  int differ = 0;
  for (const auto& entry : Corpus()) {
    if (entry.direct.profiles != entry.dual.profiles) ++differ;
  }
  if (differ > 0 || Corpus().empty()) v.Fail("profile sets differ");
  v.detail += (v.pass ? "" : "; ") + std::to_string(Corpus().size()) +
              " instances, " + std::to_string(differ) + " differ";
  return v;
}

Verdict Bounds() {
  Verdict v;
  auto mpz = [](std::uint64_t x) { return mpz_class(std::to_string(x)); };
  for (const auto& entry : Corpus()) {
    const int n = entry.inst.agents(), m = entry.inst.chores();
    const mpz_class direct_bound = DirectFamilyBound(n, m);
    const mpz_class dual_bound = DualFamilyBound(n, m);
    if (mpz(entry.direct.stats.graphs_enumerated) > direct_bound) {
      v.Fail("direct enumeration over bound");
    }
    if (mpz(entry.dual.stats.graphs_enumerated) > dual_bound) {
      v.Fail("dual enumeration over bound");
    }
    const mpz_class profiles = mpz(entry.direct.profiles.size());
    if (profiles > direct_bound || profiles > dual_bound) {
      v.Fail("profile count over bound");
    }
  }
  if (Corpus().empty()) v.Fail("empty corpus");
  if (v.pass) v.detail = "graph and profile counts within both bounds";
  return v;
}

Verdict Degenerate() {
  Verdict v;
  Instance inst = testing::Uniform(2, 4);
  SolutionSet s = SolveAll(inst);
  if (s.profiles != std::vector<UtilityProfile>{Qs({"-2", "-2"})}) {
    v.Fail("expected the single profile (-2, -2)");
  }
  AllAllocationsResult all = AllAllocations(inst, s);
  if (!all.degenerate || !all.allocations.empty() || all.explanation.empty()) {
    v.Fail("all_allocations did not refuse");
  }
  if (v.pass) v.detail = "one profile (-2, -2); refusal: " + all.explanation;
  return v;
}

Verdict Rounding() {
  Verdict v;
  const auto start = Clock::now();
  std::mt19937_64 rng(20260202);
  int failures = 0;
  for (int k = 0; k < 200; ++k) {
    Instance inst = testing::RandomSizedInstance(rng, 5, 5);
    RationalVector weights = Magnitudes(inst.budgets());
    FairRounding r = RoundFair(inst, weights);
    const bool ok = CheckEf11(inst, r.allocation, weights) &&
                    CheckProp1(inst, r.allocation, weights) &&
                    BudgetsClose(r.allocation, r.p, r.budgets) &&
                    r.AllCertified();
    if (!ok && failures++ == 0) v.Fail("instance " + std::to_string(k));
  }
  std::ostringstream d;
  d << (v.pass ? "" : v.detail + "; ") << "200 instances, " << failures
    << " failures, " << SecondsSince(start) << " s";
  v.detail = d.str();
  return v;
}

Verdict DeskScale() {
  Verdict v;
  std::mt19937_64 rng(20260303);
  Instance inst = testing::RandomInstance(rng, 3, 8);
  SolveOptions options;
  options.mode = EnumerationMode::kDirect;
  const auto start = Clock::now();
  SolutionSet s = SolveAll(inst, options);
  const double seconds = SecondsSince(start);
  if (seconds >= 10) v.Fail("took " + std::to_string(seconds) + " s");
  if (s.stats.graphs_enumerated > 4913) v.Fail("more than 17^3 graphs");
  if (s.profiles.empty()) v.Fail("no equilibrium found");
  std::ostringstream d;
  d << (v.pass ? "" : v.detail + "; ") << s.stats.graphs_enumerated
    << " graphs, " << s.profiles.size() << " profiles, " << seconds << " s";
  v.detail = d.str();
  return v;
}

}  // namespace
}  // namespace choremarket

int main() {
  using namespace choremarket;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"example reproduction", ExampleOneReproduction},
      {"oracle equivalence", OracleEquivalence},
      {"welfare and fairness", WelfareAndFairness},
      {"direct/dual consistency", Duality},
      {"bound compliance", Bounds},
      {"degenerate instance", Degenerate},
      {"rounding guarantees", Rounding},
      {"desk-scale runtime", DeskScale},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Verdict verdict;
    try {
      verdict = check();
    } catch (const std::exception& e) {
      verdict.Fail(std::string("exception: ") + e.what());
    }
    failed += !verdict.pass;
    std::printf("criterion %d (%s): %s  [%s]\n", index, name,
                verdict.pass ? "PASS" : "FAIL", verdict.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

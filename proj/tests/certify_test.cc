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

#include "choremarket/certify.h"

#include <gtest/gtest.h>

#include <random>

#include "choremarket/max_flow.h"
#include "choremarket/oracle.h"
#include "test_util.h"

namespace choremarket {
namespace {

using testing::ExampleOne;
using testing::Q;
using testing::QMatrix;
using testing::Qs;
using testing::RandomInstance;

TEST(MaxFlowTest, SmallNetwork) {
  // s=0, t=3; two disjoint paths and a cross arc.
  MaxFlow<Rational> flow(4);
  int sa = flow.AddArc(0, 1, Q("3/2"));
  flow.AddArc(0, 2, Q("1"));
  flow.AddArc(1, 2, Q("1/3"));
  int at = flow.AddArc(1, 3, Q("1"));
  flow.AddArc(2, 3, Q("2"));
  // Cut {s, 1}: 1 + 1/3 + 1.
  EXPECT_EQ(flow.Solve(0, 3), Q("7/3"));
  EXPECT_EQ(flow.flow(sa), Q("4/3"));
  EXPECT_EQ(flow.flow(at), 1);
}

TEST(MaxFlowTest, IntegerCapacities) {
  MaxFlow<long long> flow(6);
  flow.AddArc(0, 1, 10);
  flow.AddArc(0, 2, 10);
  flow.AddArc(1, 2, 2);
  flow.AddArc(1, 3, 4);
  flow.AddArc(1, 4, 8);
  flow.AddArc(2, 4, 9);
  flow.AddArc(4, 3, 6);
  flow.AddArc(3, 5, 10);
  flow.AddArc(4, 5, 10);
  EXPECT_EQ(flow.Solve(0, 5), 19);
}

TEST(TauWeightsTest, Examples) {
  EXPECT_EQ(TauWeights(Qs({"-3", "-3/2"}), Qs({"-1", "-2"})),
            Qs({"1/3", "4/3"}));
  EXPECT_EQ(TauWeights(Qs({"-1", "-2"}), Qs({"-1", "-2"})), Qs({"1", "1"}));
  EXPECT_EQ(TauWeights(Qs({"-7/3"}), Qs({"-7/3"})), Qs({"1"}));
  EXPECT_THROW(TauWeights(Qs({"-1", "0"}), Qs({"-1", "-1"})),
               std::invalid_argument);
}

TEST(MinWeightedDisutilityTest, Examples) {
  Instance inst = ExampleOne();
  EXPECT_EQ(MinWeightedDisutility(inst, Qs({"-3", "-3/2"})),
            Qs({"1/3", "8/3"}));
  EXPECT_EQ(MinWeightedDisutility(inst, Qs({"-1", "-2"})), Qs({"1", "2"}));
  Instance single(QMatrix({{"-2", "-5"}}), Qs({"-3"}));
  EXPECT_EQ(MinWeightedDisutility(single, Qs({"-7"})), Qs({"6/7", "15/7"}));
}

TEST(FlowNetworkTest, ExampleSupport) {
  FlowNetwork net = BuildFlowNetwork(ExampleOne(), Qs({"-3", "-3/2"}));
  EXPECT_EQ(net.support.ToString(), "{(1,1),(1,2),(2,2)}");
  EXPECT_EQ(net.agent_capacity, Qs({"1", "2"}));
  EXPECT_EQ(net.chore_capacity, Qs({"1/3", "8/3"}));
  EXPECT_EQ(net.unbounded, 4);
}

TEST(CheckCompetitiveTest, AcceptsSecondEquilibrium) {
  CertifyResult result = CheckCompetitive(ExampleOne(), Qs({"-3", "-3/2"}));
  auto* outcome = std::get_if<CompetitiveOutcome>(&result);
  ASSERT_NE(outcome, nullptr);
  EXPECT_EQ(outcome->z, QMatrix({{"1", "1/4"}, {"0", "3/4"}}));
  EXPECT_EQ(outcome->p, Qs({"-1/3", "-8/3"}));
  EXPECT_EQ(outcome->graph.ToString(), "{(1,1),(1,2),(2,2)}");
}

TEST(CheckCompetitiveTest, AcceptsFirstEquilibrium) {
  CertifyResult result = CheckCompetitive(ExampleOne(), Qs({"-1", "-2"}));
  auto* outcome = std::get_if<CompetitiveOutcome>(&result);
  ASSERT_NE(outcome, nullptr);
  EXPECT_EQ(outcome->z, QMatrix({{"1", "0"}, {"0", "1"}}));
  EXPECT_EQ(outcome->p, Qs({"-1", "-2"}));
}

TEST(CheckCompetitiveTest, RejectsWithFlowDeficit) {
  Instance inst = ExampleOne().WithBudgets(Qs({"-1", "-1"}));
  CertifyResult result = CheckCompetitive(inst, Qs({"-3/2", "-3/2"}));
  auto* rejection = std::get_if<Rejection>(&result);
  ASSERT_NE(rejection, nullptr);
  EXPECT_EQ(rejection->reason, RejectionReason::kFlowDeficit);
  EXPECT_EQ(rejection->required, 2);
  EXPECT_LT(rejection->flow, 2);
  EXPECT_EQ(ToString(rejection->reason), "flow-deficit");
}

TEST(CheckCompetitiveTest, RejectsSumMismatchAndNonNegative) {
  CertifyResult mismatch = CheckCompetitive(ExampleOne(), Qs({"-2", "-2"}));
  ASSERT_TRUE(std::holds_alternative<Rejection>(mismatch));
  EXPECT_EQ(std::get<Rejection>(mismatch).reason, RejectionReason::kSumMismatch);
  CertifyResult zero = CheckCompetitive(ExampleOne(), Qs({"-9", "0"}));
  ASSERT_TRUE(std::holds_alternative<Rejection>(zero));
  EXPECT_EQ(std::get<Rejection>(zero).reason,
            RejectionReason::kNonNegativeUtility);
}

TEST(VerifyOutcomeTest, Examples) {
  Instance inst = ExampleOne();
  CompetitiveOutcome second{Qs({"-3", "-3/2"}),
                            QMatrix({{"1", "1/4"}, {"0", "3/4"}}),
                            Qs({"-1/3", "-8/3"}), ConsumptionGraph()};
  second.graph = ConsumptionGraphOf(second.z);
  EXPECT_TRUE(VerifyOutcome(inst, second));
  CompetitiveOutcome perturbed = second;
  perturbed.p[1] += Q("1/100");
  EXPECT_FALSE(VerifyOutcome(inst, perturbed));
  CompetitiveOutcome first{Qs({"-1", "-2"}), QMatrix({{"1", "0"}, {"0", "1"}}),
                           Qs({"-1", "-2"}), ConsumptionGraph()};
  first.graph = ConsumptionGraphOf(first.z);
  EXPECT_TRUE(VerifyOutcome(inst, first));
  CompetitiveOutcome wrong_u = first;
  wrong_u.u = Qs({"-1", "-3"});
  EXPECT_FALSE(VerifyOutcome(inst, wrong_u));
}

TEST(CheckCompetitiveTest, AcceptedOutcomesSatisfyAllCharacterizations) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    Instance inst = RandomInstance(rng, 1 + trial % 3, 1 + trial % 4);
    OracleReport report = BruteForceCu(inst);
    for (const auto& outcome : report.witnesses) {
      EXPECT_EQ(UtilityOf(inst, outcome.z), outcome.u);
      EXPECT_TRUE(IsFeasible(inst, outcome.z));
      EXPECT_TRUE(VerifyOutcome(inst, outcome));
      EXPECT_TRUE(KktCheck(inst, outcome.z));
      ConsumptionGraph mww =
          MwwGraphForWeights(inst, TauWeights(outcome.u, inst.budgets()));
      EXPECT_TRUE(outcome.graph.IsSubgraphOf(mww));
      // Inequality form: z_ij > 0 implies
      // v_ij b_i / u_i >= v_kj b_k / u_k for all k.
      for (int i = 0; i < inst.agents(); ++i) {
        for (int j = 0; j < inst.chores(); ++j) {
          if (sgn(outcome.z(i, j)) == 0) continue;
          for (int k = 0; k < inst.agents(); ++k) {
            EXPECT_GE(inst.value(i, j) * inst.budget(i) / outcome.u[i],
                      inst.value(k, j) * inst.budget(k) / outcome.u[k]);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace choremarket

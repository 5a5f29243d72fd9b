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

#include <gtest/gtest.h>

#include <vector>

#include "test_util.h"

namespace choremarket {
namespace {

using testing::ExampleOne;
using testing::Q;
using testing::QMatrix;
using testing::Qs;
using testing::Uniform;

TEST(RationalTest, ParsesExactForms) {
  EXPECT_EQ(ParseRational("-0.5"), Rational(-1, 2));
  EXPECT_EQ(ParseRational("6/4"), Rational(3, 2));
  EXPECT_EQ(ParseRational("-3"), Rational(-3));
  EXPECT_EQ(ParseRational("1.25e-1"), Rational(1, 8));
  EXPECT_EQ(ParseRational("2E2"), Rational(200));
  EXPECT_EQ(ParseRational("-1/-2"), Rational(1, 2));
  EXPECT_THROW(ParseRational("1/0"), std::invalid_argument);
  EXPECT_THROW(ParseRational("abc"), std::invalid_argument);
  EXPECT_THROW(ParseRational(""), std::invalid_argument);
  EXPECT_THROW(ParseRational("1.2.3"), std::invalid_argument);
}

TEST(RationalTest, PrintsLowestTerms) {
  EXPECT_EQ(ToString(ParseRational("-6/4")), "-3/2");
  EXPECT_EQ(ToString(Rational(4)), "4");
  EXPECT_EQ(ToString(Qs({"-1", "1/2"})), "(-1, 1/2)");
}

TEST(ValidateInstanceTest, AcceptsExampleUnchanged) {
  RawInstance raw{{Qs({"-1", "-8"}), Qs({"-1", "-2"})}, Qs({"-1", "-2"})};
  PreparedInstance prepared = ValidateInstance(raw);
  EXPECT_TRUE(prepared.preassigned.empty());
  EXPECT_EQ(prepared.instance.values(), ExampleOne().values());
  EXPECT_EQ(prepared.instance.budgets(), ExampleOne().budgets());
  EXPECT_EQ(prepared.residual_chores, (std::vector<int>{0, 1}));
}

TEST(ValidateInstanceTest, PreassignsZeroValuedChore) {
  RawInstance raw{{Qs({"-1", "0"}), Qs({"-1", "-2"})}, Qs({"-1", "-1"})};
  PreparedInstance prepared = ValidateInstance(raw);
  ASSERT_EQ(prepared.preassigned.size(), 1u);
  EXPECT_EQ(prepared.preassigned[0], (Preassignment{1, 0}));
  EXPECT_EQ(prepared.instance.agents(), 2);
  EXPECT_EQ(prepared.instance.chores(), 1);
  EXPECT_EQ(prepared.residual_chores, (std::vector<int>{0}));
  EXPECT_EQ(prepared.original_chores, 2);
}

TEST(ValidateInstanceTest, ZeroChoreGoesToLowestIndifferentAgent) {
  RawInstance raw{{Qs({"-1", "-1"}), Qs({"-1", "0"}), Qs({"-1", "0"})},
                  Qs({"-1", "-1", "-1"})};
  PreparedInstance prepared = ValidateInstance(raw);
  ASSERT_EQ(prepared.preassigned.size(), 1u);
  EXPECT_EQ(prepared.preassigned[0].agent, 1);
}

TEST(ValidateInstanceTest, RejectsInvalidInput) {
  EXPECT_THROW(ValidateInstance({{Qs({"1", "-1"})}, Qs({"-1"})}),
               InstanceError);
  EXPECT_THROW(ValidateInstance({{Qs({"-1"})}, Qs({"0"})}), InstanceError);
  EXPECT_THROW(ValidateInstance({{Qs({"-1"})}, Qs({"-1", "-1"})}),
               InstanceError);
  EXPECT_THROW(ValidateInstance({{Qs({"-1", "-1"}), Qs({"-1"})},
                                 Qs({"-1", "-1"})}),
               InstanceError);
  EXPECT_THROW(ValidateInstance({{}, {}}), InstanceError);
  EXPECT_THROW(ValidateInstance({{RationalVector{}}, Qs({"-1"})}),
               InstanceError);
  EXPECT_THROW(ValidateInstance({{Qs({"0"})}, Qs({"-1"})}), InstanceError);
}

TEST(InstanceTest, ConstructorEnforcesSigns) {
  EXPECT_THROW(Instance(QMatrix({{"-1", "0"}}), Qs({"-1"})), InstanceError);
  EXPECT_THROW(Instance(QMatrix({{"-1"}}), Qs({"1"})), InstanceError);
  Instance inst = ExampleOne();
  EXPECT_EQ(inst.disutility(0, 1), 8);
  EXPECT_EQ(inst.value(0, 1), -8);
}

TEST(UtilityOfTest, ExampleAllocations) {
  Instance inst = ExampleOne();
  EXPECT_EQ(UtilityOf(inst, QMatrix({{"1", "1/4"}, {"0", "3/4"}})),
            Qs({"-3", "-3/2"}));
  EXPECT_EQ(UtilityOf(inst, QMatrix({{"1", "0"}, {"0", "1"}})),
            Qs({"-1", "-2"}));
  EXPECT_EQ(UtilityOf(inst, QMatrix({{"1", "1"}, {"0", "0"}}))[1], 0);
}

TEST(ConsumptionGraphTest, FromAllocation) {
  EXPECT_EQ(ConsumptionGraphOf(QMatrix({{"1", "1/4"}, {"0", "3/4"}})).ToString(),
            "{(1,1),(1,2),(2,2)}");
  EXPECT_EQ(ConsumptionGraphOf(QMatrix({{"1", "0"}, {"0", "1"}})).ToString(),
            "{(1,1),(2,2)}");
  EXPECT_EQ(ConsumptionGraphOf(QMatrix({{"1/2", "1/2"}, {"1/2", "1/2"}})),
            ConsumptionGraph::Complete(2, 2));
}

TEST(ConsumptionGraphTest, DegreesAndCycles) {
  ConsumptionGraph g = ConsumptionGraph::Complete(2, 2);
  EXPECT_EQ(g.EdgeCount(), 4);
  EXPECT_EQ(g.AgentDegree(0), 2);
  EXPECT_FALSE(g.IsAcyclic());
  g.SetEdge(1, 1, false);
  EXPECT_TRUE(g.IsAcyclic());
  EXPECT_EQ(g.ChoreDegree(1), 1);
  EXPECT_TRUE(g.IsSubgraphOf(ConsumptionGraph::Complete(2, 2)));
  EXPECT_FALSE(ConsumptionGraph::Complete(2, 2).IsSubgraphOf(g));
  EXPECT_EQ(g.Transposed().Transposed(), g);
  EXPECT_EQ(g.Transposed().agents(), 2);
  EXPECT_TRUE(g.Transposed().HasEdge(1, 0));
}

TEST(IsFeasibleTest, ColumnSumsAndSigns) {
  Instance inst = ExampleOne();
  EXPECT_TRUE(IsFeasible(inst, QMatrix({{"1", "1/4"}, {"0", "3/4"}})));
  EXPECT_FALSE(IsFeasible(inst, QMatrix({{"1", "1/4"}, {"0", "1/2"}})));
  EXPECT_FALSE(IsFeasible(inst, QMatrix({{"2", "0"}, {"-1", "1"}})));
}

TEST(PathProductTest, ExamplePaths) {
  Instance inst = ExampleOne();
  std::vector<int> via_chore2{0, 1, 1};
  std::vector<int> via_chore1{0, 0, 1};
  std::vector<int> loop{0, 1, 0};
  EXPECT_EQ(PathProduct(inst, via_chore2), 4);
  EXPECT_EQ(PathProduct(inst, via_chore1), 1);
  EXPECT_EQ(PathProduct(inst, loop), 1);
}

TEST(PathProductTest, RejectsMalformedPaths) {
  Instance inst = ExampleOne();
  std::vector<int> even{0, 1};
  std::vector<int> single{0};
  std::vector<int> bad_chore{0, 5, 1};
  EXPECT_THROW(PathProduct(inst, even), std::invalid_argument);
  EXPECT_THROW(PathProduct(inst, single), std::invalid_argument);
  EXPECT_THROW(PathProduct(inst, bad_chore), std::invalid_argument);
}

TEST(PathProductTest, CycleTimesReversalIsOne) {
  Instance inst(QMatrix({{"-1", "-8", "-3"}, {"-1", "-2", "-7/2"},
                         {"-5", "-1/3", "-2"}}),
                Qs({"-1", "-1", "-1"}));
  std::vector<int> cycle{0, 1, 1, 2, 2, 0, 0};
  std::vector<int> reversed{0, 0, 2, 2, 1, 1, 0};
  EXPECT_EQ(PathProduct(inst, cycle) * PathProduct(inst, reversed), 1);
}

TEST(ParetoOptimalTest, ExampleAllocations) {
  Instance inst = ExampleOne();
  EXPECT_TRUE(IsParetoOptimal(inst, QMatrix({{"1", "1/4"}, {"0", "3/4"}})));
  EXPECT_TRUE(IsParetoOptimal(inst, QMatrix({{"1", "0"}, {"0", "1"}})));
  EXPECT_FALSE(IsParetoOptimal(inst, QMatrix({{"0", "1"}, {"1", "0"}})));
  Instance single(QMatrix({{"-1", "-2"}}), Qs({"-1"}));
  EXPECT_TRUE(IsParetoOptimal(single, QMatrix({{"1", "1"}})));
}

TEST(ParetoOptimalTest, UniformValuesAlwaysEfficient) {
  Instance inst = Uniform(2, 2);
  EXPECT_TRUE(
      IsParetoOptimal(inst, QMatrix({{"1/2", "1/2"}, {"1/2", "1/2"}})));
}

TEST(WeightedEnvyFreeTest, ExampleAllocations) {
  Instance inst = ExampleOne();
  RationalVector beta = Qs({"1", "2"});
  EXPECT_TRUE(
      IsWeightedEnvyFree(inst, QMatrix({{"1", "1/4"}, {"0", "3/4"}}), beta));
  EXPECT_TRUE(IsWeightedEnvyFree(inst, QMatrix({{"1", "0"}, {"0", "1"}}), beta));
  EXPECT_FALSE(IsWeightedEnvyFree(inst, QMatrix({{"1", "1"}, {"0", "0"}}),
                                  Qs({"1", "1"})));
}

TEST(DegeneracyTest, Examples) {
  EXPECT_FALSE(IsDegenerate(ExampleOne()));
  EXPECT_TRUE(IsDegenerate(Uniform(2, 4)));
  EXPECT_FALSE(IsDegenerate(Uniform(1, 5)));
  EXPECT_FALSE(IsDegenerate(Uniform(4, 1)));
}

TEST(DegeneracyTest, LongCycleOnly) {
  // Every 4-cycle has product != 1 but the 6-cycle
  // a0 c0 a1 c1 a2 c2 a0 has product (2/1)(2/1)(1/4) = 1.
  Instance inst(QMatrix({{"-2", "-7", "-4"}, {"-1", "-2", "-11"},
                         {"-13", "-1", "-1"}}),
                Qs({"-1", "-1", "-1"}));
  std::vector<int> cycle{0, 0, 1, 1, 2, 2, 0};
  ASSERT_EQ(PathProduct(inst, cycle), 1);
  EXPECT_TRUE(IsDegenerate(inst));
}

TEST(DegeneracyTest, CapIsEnforced) {
  EXPECT_THROW(IsDegenerate(Uniform(4, 4), 100), CapExceeded);
  EXPECT_NO_THROW(IsDegenerate(Uniform(2, 2), 16));
}

}  // namespace
}  // namespace choremarket

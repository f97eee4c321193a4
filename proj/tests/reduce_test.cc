// Copyright 2026 The covertime Authors
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

#include "covertime/reduce.h"

#include <gtest/gtest.h>

#include <random>

#include "covertime/brute_force.h"
#include "covertime/config_lp.h"
#include "covertime/generator.h"
#include "covertime/intervals.h"
#include "covertime/random.h"
#include "test_util.h"

namespace covertime {
namespace {

using testing::CaughtCode;
using testing::Q;

CoverInstance MakeInstance(CostOracle oracle, Day horizon, std::vector<DemandWindow> windows) {
  CoverInstance instance;
  instance.n_items = oracle.n_items();
  instance.horizon = horizon;
  instance.oracle = std::move(oracle);
  instance.windows = std::move(windows);
  return instance;
}

std::vector<Interval> Family(const CoverInstance& instance) {
  std::vector<Interval> family;
  for (const DemandWindow& w : instance.windows) family.push_back({w.start, w.end});
  return family;
}

// Serves every window on its first day.
Schedule StartDaySchedule(const CoverInstance& instance) {
  Schedule schedule(instance.horizon);
  for (const DemandWindow& w : instance.windows) schedule.Add(w.start, w.item);
  return schedule;
}

InventoryInstance SingleDemand(Day day) {
  InventoryInstance inventory;
  inventory.n_items = 1;
  inventory.horizon = day;
  inventory.oracle = CostOracle::Modular(0, {1});
  inventory.demands = {{0, day, 1}};
  return inventory;
}

DemandWindow MedianWindowFor(Day day, const std::vector<Rational>& mass) {
  std::map<std::tuple<ItemId, Day, Day>, Rational> x;
  for (Day s = 1; s <= day; ++s) x[{0, s, day}] = mass[s - 1];
  SubInstance out = MedianWindows(SingleDemand(day), x, FractionalSetSolution(day));
  EXPECT_EQ(out.instance.windows.size(), 1u);
  return out.instance.windows.at(0);
}

TEST(MedianWindowsTest, TailMassExamples) {
  EXPECT_EQ(MedianWindowFor(4, {Q("0.25"), Q("0.25"), Q("0.25"), Q("0.25")}),
            (DemandWindow{0, 3, 4}));
  EXPECT_EQ(MedianWindowFor(4, {0, 0, 0, 1}), (DemandWindow{0, 4, 4}));
  EXPECT_EQ(MedianWindowFor(2, {Q("0.5"), Q("0.5")}), (DemandWindow{0, 2, 2}));
  EXPECT_EQ(MedianWindowFor(3, {Q("0.6"), Q("0.3"), Q("0.1")}), (DemandWindow{0, 1, 3}));
}

TEST(MedianWindowsTest, UnderAssignedDemandIsInfeasible) {
  std::map<std::tuple<ItemId, Day, Day>, Rational> x = {{{0, 1, 2}, Q("0.5")}};
  EXPECT_EQ(CaughtCode([&] { MedianWindows(SingleDemand(2), x, FractionalSetSolution(2)); }),
            ErrorCode::kInfeasibleInput);
}

TEST(MedianWindowsTest, DoubledSolutionCoversTheNewWindows) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    InventoryInstance inventory;
    inventory.n_items = UniformInt(rng, 1, 4);
    inventory.horizon = UniformInt(rng, 1, 6);
    inventory.oracle = testing::RandomSubmodularOracle(inventory.n_items, rng);
    std::map<std::tuple<ItemId, Day, Day>, Rational> x;
    FractionalSetSolution y(inventory.horizon);
    for (ItemId v = 0; v < inventory.n_items; ++v) {
      const Day t = UniformInt(rng, 1, inventory.horizon);
      inventory.demands.push_back({v, t, UniformInt(rng, 1, 5)});
      // Split the unit over random days up to t, with y supporting it.
      int left = 12;
      while (left > 0) {
        const Day s = UniformInt(rng, 1, t);
        const int part = UniformInt(rng, 1, left);
        x[{v, s, t}] += Rational(part, 12);
        x[{v, s, t}].canonicalize();
        y.Add(s, {v}, testing::Frac(part, 12));
        left -= part;
      }
    }
    SubInstance out = MedianWindows(inventory, x, y);
    EXPECT_TRUE(UncoveredWindows(out.instance, out.y).empty());
    EXPECT_EQ(SetSolutionValue(out.y, out.instance.oracle), 2 * SetSolutionValue(y, inventory.oracle));
  }
}

TEST(SplitLeftRightTest, Examples) {
  CostOracle f = CostOracle::Modular(0, {1, 1, 1});
  CoverInstance instance = MakeInstance(f, 8, {{0, 3, 6}, {1, 1, 4}, {2, 7, 7}});
  FractionalSetSolution y(8);
  y.Add(5, {0}, 1);
  y.Add(2, {1}, 1);
  y.Add(7, {2}, 1);
  AlignedSplit split = SplitLeftRight(instance, y);
  ASSERT_EQ(split.left.instance.windows.size(), 1u);
  EXPECT_EQ(split.left.instance.windows[0], (DemandWindow{0, 5, 6}));
  ASSERT_EQ(split.right.instance.windows.size(), 2u);
  EXPECT_EQ(split.right.instance.windows[0], (DemandWindow{1, 1, 4}));
  EXPECT_EQ(split.right.instance.windows[1], (DemandWindow{2, 7, 7}));
  EXPECT_EQ(SetSolutionValue(split.left.y, f), 6);
}

TEST(SplitLeftRightTest, InfeasibleSolutionIsRejected) {
  CoverInstance instance = MakeInstance(CostOracle::Modular(0, {1}), 2, {{0, 1, 2}});
  FractionalSetSolution y(2);
  y.Add(1, {0}, Q("0.5"));
  EXPECT_EQ(CaughtCode([&] { SplitLeftRight(instance, y); }), ErrorCode::kInfeasibleInput);
}

TEST(SplitLeftRightTest, RandomInstancesKeepFeasibilityAndFactorFour) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = UniformInt(rng, 1, 5);
    CoverInstance instance = testing::RandomArbitraryInstance(
        testing::RandomSubmodularOracle(n, rng), UniformInt(rng, 1, 16), UniformInt(rng, 1, 2), rng);
    const ConfigLpResult lp = SolveConfigLp(instance);
    AlignedSplit split = SplitLeftRight(instance, lp.y);
    EXPECT_TRUE(FamilyIsLeftAligned(Family(split.left.instance)));
    const Alignment right = AlignedKind(Family(split.right.instance));
    EXPECT_TRUE(right == Alignment::kRight || right == Alignment::kLaminar ||
                right == Alignment::kBothTrivially);
    EXPECT_TRUE(UncoveredWindows(split.left.instance, split.left.y).empty());
    EXPECT_TRUE(UncoveredWindows(split.right.instance, split.right.y).empty());
    const Rational combined =
        SolveConfigLp(split.left.instance).value + SolveConfigLp(split.right.instance).value;
    EXPECT_LE(combined, 4 * lp.value);
    // Serving both halves serves the original.
    Schedule both = UnionSchedules(StartDaySchedule(split.left.instance),
                                   StartDaySchedule(split.right.instance));
    EXPECT_TRUE(CheckFeasible(instance, both).empty());
  }
}

TEST(MirrorTest, RightAlignedBecomesLeftAligned) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = UniformInt(rng, 1, 5);
    CoverInstance instance = testing::RandomArbitraryInstance(
        testing::RandomSubmodularOracle(n, rng), UniformInt(rng, 1, 20), 1, rng);
    const ConfigLpResult lp = SolveConfigLp(instance);
    const SubInstance right = SplitLeftRight(instance, lp.y).right;
    const SubInstance mirrored = MirrorToLeft(right.instance, right.y);
    EXPECT_TRUE(FamilyIsLeftAligned(Family(mirrored.instance)));
    EXPECT_TRUE(UncoveredWindows(mirrored.instance, mirrored.y).empty());
    EXPECT_EQ(SetSolutionValue(mirrored.y, instance.oracle), SetSolutionValue(right.y, instance.oracle));
    Schedule back = MapSchedule(StartDaySchedule(mirrored.instance), mirrored.mapping,
                                right.instance.horizon);
    EXPECT_TRUE(CheckFeasible(right.instance, back).empty());
  }
}

TEST(MirrorTest, PaddingDaysMapToZero) {
  CoverInstance instance = MakeInstance(CostOracle::Modular(0, {1}), 3, {{0, 3, 3}});
  FractionalSetSolution y(3);
  y.Add(3, {0}, 1);
  SubInstance mirrored = MirrorToLeft(instance, y);
  EXPECT_EQ(mirrored.instance.horizon, 4);
  EXPECT_EQ(mirrored.instance.windows[0], (DemandWindow{0, 2, 2}));
  EXPECT_EQ(mirrored.mapping.day_map, (std::vector<Day>{0, 3, 2, 1}));
}

std::vector<std::vector<ItemId>> GroupItems(const std::vector<SubInstance>& groups) {
  std::vector<std::vector<ItemId>> items;
  for (const SubInstance& g : groups) items.push_back(g.mapping.item_map);
  return items;
}

TEST(WellSeparatedTest, Examples) {
  CoverInstance equal = MakeInstance(CostOracle::Modular(0, {3, 3, 3}), 1, {});
  EXPECT_EQ(GroupItems(WellSeparatedPartition(equal)), (std::vector<std::vector<ItemId>>{{0, 1, 2}}));
  CoverInstance two = MakeInstance(CostOracle::Modular(0, {100, 1}), 1, {});
  EXPECT_EQ(GroupItems(WellSeparatedPartition(two)), (std::vector<std::vector<ItemId>>{{0}, {1}}));
  CoverInstance four = MakeInstance(CostOracle::Modular(0, {8, 4, 2, 1}), 1, {{3, 1, 1}});
  const std::vector<SubInstance> groups = WellSeparatedPartition(four);
  EXPECT_EQ(GroupItems(groups), (std::vector<std::vector<ItemId>>{{0, 1, 2}, {3}}));
  EXPECT_TRUE(groups[0].instance.windows.empty());
  EXPECT_EQ(groups[1].instance.windows[0], (DemandWindow{0, 1, 1}));
  EXPECT_EQ(groups[1].instance.oracle.Singleton(0), 1);
}

TEST(WellSeparatedTest, GroupsAreWellSeparatedAndPartitionTheItems) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = UniformInt(rng, 1, 10);
    CoverInstance instance = testing::RandomArbitraryInstance(
        RandomOracle(static_cast<OracleKind>(UniformInt(rng, 0, 4)), n, rng), 6, 1, rng);
    std::vector<int> seen(n, 0);
    for (const SubInstance& g : WellSeparatedPartition(instance)) {
      Rational lo, hi;
      for (ItemId v = 0; v < g.instance.n_items; ++v) {
        ++seen[g.mapping.item_map[v]];
        const Rational c = g.instance.oracle.Singleton(v);
        if (v == 0 || c < lo) lo = c;
        if (v == 0 || c > hi) hi = c;
      }
      EXPECT_GE(n * lo, hi);
    }
    EXPECT_EQ(seen, std::vector<int>(n, 1));
  }
}

TEST(WellSeparatedTest, UnionOfGroupOptimaWithinThreeTimesOptimum) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = UniformInt(rng, 2, 5);
    CoverInstance instance = testing::RandomArbitraryInstance(
        RandomOracle(static_cast<OracleKind>(UniformInt(rng, 0, 4)), n, rng), 4, 1, rng);
    const Rational opt = BruteForceOptimum(instance).cost;
    std::vector<std::pair<Schedule, InstanceMapping>> parts;
    for (const SubInstance& g : WellSeparatedPartition(instance)) {
      parts.push_back({BruteForceOptimum(g.instance).schedule, g.mapping});
    }
    const Schedule merged = Recombine(parts, instance.horizon);
    EXPECT_TRUE(CheckFeasible(instance, merged).empty());
    EXPECT_LE(ScheduleCost(instance, merged), 3 * opt);
  }
}

TEST(SparsifyTest, GoodDaysAreUnchanged) {
  CoverInstance instance = MakeInstance(CostOracle::Modular(0, {1, 1}), 3, {{0, 1, 1}, {1, 3, 3}});
  FractionalSetSolution y(3);
  y.Add(1, {0}, 1);
  y.Add(3, {1}, 1);
  FractionalSetSolution out = Sparsify(y, instance);
  for (Day t = 1; t <= 3; ++t) EXPECT_EQ(out.DayMass(t), y.DayMass(t));
}

TEST(SparsifyTest, LightTailMovesToThePreviousDay) {
  CoverInstance instance = MakeInstance(CostOracle::Modular(0, {1}), 2, {{0, 1, 2}});
  FractionalSetSolution y(2);
  y.Add(1, {0}, Q("0.6"));
  y.Add(2, {0}, Q("0.4"));
  // Day 1 is light too, and 0.6 + 0.4 reaches one: both ends get the run.
  FractionalSetSolution out = Sparsify(y, instance);
  EXPECT_EQ(out.DayMass(1), 1);
  EXPECT_EQ(out.DayMass(2), 1);

  FractionalSetSolution tail(3);
  tail.Add(1, {0}, 1);
  tail.Add(2, {0}, Q("0.4"));
  CoverInstance three = MakeInstance(CostOracle::Modular(0, {1}), 3, {{0, 1, 3}});
  FractionalSetSolution folded = Sparsify(tail, three);
  EXPECT_EQ(folded.DayMass(1), Q("1.4"));
  EXPECT_EQ(folded.DayMass(2), 0);
  EXPECT_EQ(folded.DayMass(3), 0);
}

TEST(SparsifyTest, RunIsCopiedToBothEnds) {
  CoverInstance instance = MakeInstance(CostOracle::Modular(0, {1, 1}), 3, {{0, 1, 2}, {1, 2, 3}});
  FractionalSetSolution y(3);
  y.Add(1, {0}, Q("0.4"));
  y.Add(2, {0, 1}, Q("0.6"));
  y.Add(3, {1}, Q("0.4"));
  FractionalSetSolution out = Sparsify(y, instance);
  // Days 1 and 2 form a run of one unit; the light day 3 is then a tail
  // and folds into day 2.
  EXPECT_EQ(out.DayMass(1), 1);
  EXPECT_EQ(out.Coverage(1, 1), Q("0.6"));
  EXPECT_EQ(out.DayMass(2), Q("1.4"));
  EXPECT_EQ(out.DayMass(3), 0);
}

TEST(SparsifyTest, RandomSolutionsExact) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = UniformInt(rng, 1, 5);
    CoverInstance instance = testing::RandomArbitraryInstance(
        testing::RandomSubmodularOracle(n, rng), UniformInt(rng, 1, 16), UniformInt(rng, 1, 2), rng);
    // A feasible but deliberately spread-out solution: each window's unit
    // is split evenly over its days.
    FractionalSetSolution y(instance.horizon);
    for (const DemandWindow& w : instance.windows) {
      const Rational share = testing::Frac(1, w.end - w.start + 1);
      for (Day t = w.start; t <= w.end; ++t) y.Add(t, {w.item}, share);
    }
    FractionalSetSolution out = Sparsify(y, instance);
    EXPECT_TRUE(UncoveredWindows(instance, out).empty());
    EXPECT_LE(SetSolutionValue(out, instance.oracle), 2 * SetSolutionValue(y, instance.oracle));
    for (Day t = 1; t <= instance.horizon; ++t) {
      const Rational mass = out.DayMass(t);
      EXPECT_TRUE(mass == 0 || mass >= 1) << "day " << t;
    }
  }
}

TEST(BoundTimeHorizonTest, SmallHorizonIsOneChunk) {
  CoverInstance instance = MakeInstance(CostOracle::Modular(0, {1, 1}), 2, {{0, 1, 1}, {1, 2, 2}});
  FractionalSetSolution y(2);
  y.Add(1, {0}, 1);
  y.Add(2, {1}, 1);
  HorizonBound bound = BoundTimeHorizon(instance, y);
  ASSERT_EQ(bound.chunks.size(), 1u);
  EXPECT_EQ(bound.chunks[0].mapping, InstanceMapping::Identity(2, 2));
  EXPECT_EQ(bound.resets, Schedule(2));
}

TEST(BoundTimeHorizonTest, ZeroDaysAreDeleted) {
  CoverInstance instance = MakeInstance(CostOracle::Modular(0, {1, 1}), 16, {{0, 1, 4}, {1, 9, 12}});
  FractionalSetSolution y(16);
  y.Add(1, {0}, 1);
  y.Add(9, {1}, 1);
  HorizonBound bound = BoundTimeHorizon(instance, y);
  ASSERT_EQ(bound.chunks.size(), 1u);
  EXPECT_EQ(bound.chunks[0].instance.horizon, 2);
  EXPECT_EQ(bound.chunks[0].mapping.day_map, (std::vector<Day>{1, 9}));
}

TEST(BoundTimeHorizonTest, SingleItemChunksHaveOneDay) {
  CoverInstance instance = MakeInstance(CostOracle::Modular(0, {1}), 8, {{0, 1, 2}, {0, 5, 8}});
  FractionalSetSolution y(8);
  y.Add(2, {0}, 1);
  y.Add(6, {0}, 1);
  HorizonBound bound = BoundTimeHorizon(instance, y);
  for (const SubInstance& chunk : bound.chunks) EXPECT_EQ(chunk.instance.horizon, 1);
  std::vector<std::pair<Schedule, InstanceMapping>> parts;
  for (const SubInstance& chunk : bound.chunks) {
    parts.push_back({StartDaySchedule(chunk.instance), chunk.mapping});
  }
  const Schedule merged = UnionSchedules(Recombine(parts, 8), bound.resets);
  EXPECT_TRUE(CheckFeasible(instance, merged).empty());
  EXPECT_TRUE(merged.Contains(2, 0));
}

TEST(BoundTimeHorizonTest, TranslatedSchedulesAreFeasible) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = UniformInt(rng, 1, 4);
    CostOracle f = RandomOracle(static_cast<OracleKind>(UniformInt(rng, 0, 3)), n, rng);
    CoverInstance instance;
    instance.n_items = n;
    instance.horizon = 64;
    instance.oracle = f;
    for (ItemId v = 0; v < n; ++v) {
      for (int k = 0; k < 3; ++k) {
        instance.windows.push_back(RandomWindow(v, 64, WindowStyle::kLeftAligned, rng));
      }
    }
    const ConfigLpResult lp = SolveConfigLp(instance);
    HorizonBound bound = BoundTimeHorizon(instance, lp.y);
    std::vector<std::pair<Schedule, InstanceMapping>> parts;
    for (const SubInstance& chunk : bound.chunks) {
      EXPECT_LE(chunk.instance.horizon, n * n);
      EXPECT_TRUE(UncoveredWindows(chunk.instance, chunk.y).empty());
      parts.push_back({StartDaySchedule(chunk.instance), chunk.mapping});
    }
    const Schedule merged = UnionSchedules(Recombine(parts, 64), bound.resets);
    EXPECT_TRUE(CheckFeasible(instance, merged).empty());
  }
}

TEST(NicifyTest, CopiesAndTowerHorizon) {
  CoverInstance instance = MakeInstance(CostOracle::Modular(1, {2, 3}), 10, {{0, 1, 2}, {0, 5, 6}, {1, 9, 10}});
  SubInstance nice = Nicify(instance);
  EXPECT_EQ(nice.instance.n_items, 3);
  EXPECT_EQ(nice.instance.horizon, 16);
  EXPECT_TRUE(nice.instance.nice);
  EXPECT_EQ(nice.mapping.item_map, (std::vector<ItemId>{0, 0, 1}));
  EXPECT_EQ(nice.instance.oracle.Evaluate({0, 1}), 3);
  EXPECT_EQ(nice.mapping.ParentDay(11), 0);

  CoverInstance sixteen = MakeInstance(CostOracle::Modular(0, {1}), 16, {{0, 1, 16}});
  EXPECT_EQ(Nicify(sixteen).instance.horizon, 16);
}

TEST(NicifyTest, RejectsNonLeftAlignedFamilies) {
  CoverInstance instance = MakeInstance(CostOracle::Modular(0, {1}), 4, {{0, 2, 3}});
  EXPECT_EQ(CaughtCode([&] { Nicify(instance); }), ErrorCode::kMalformedInput);
}

TEST(NicifyTest, OutputIsNiceAndMapsBack) {
  std::mt19937_64 rng(38);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = UniformInt(rng, 1, 5);
    CoverInstance instance;
    instance.n_items = n;
    instance.horizon = UniformInt(rng, 1, 40);
    instance.oracle = testing::RandomSubmodularOracle(n, rng);
    for (ItemId v = 0; v < n; ++v) {
      for (int k = UniformInt(rng, 0, 2); k > 0; --k) {
        instance.windows.push_back(RandomWindow(v, instance.horizon, WindowStyle::kLeftAligned, rng));
      }
    }
    SubInstance nice = Nicify(instance);
    EXPECT_NO_THROW(nice.instance.Validate());
    EXPECT_TRUE(IsTower(nice.instance.horizon));
    Schedule back = MapSchedule(StartDaySchedule(nice.instance), nice.mapping, instance.horizon);
    EXPECT_TRUE(CheckFeasible(instance, back).empty());
  }
}

TEST(RecombineTest, IdentityAndMismatch) {
  Schedule s(3);
  s.Add(2, 1);
  EXPECT_EQ(Recombine({{s, InstanceMapping::Identity(2, 3)}}, 3), s);
  EXPECT_EQ(CaughtCode([&] { Recombine({{s, InstanceMapping::Identity(2, 2)}}, 3); }),
            ErrorCode::kMalformedInput);
  EXPECT_EQ(CaughtCode([&] { Recombine({{s, InstanceMapping::Identity(1, 3)}}, 3); }),
            ErrorCode::kMalformedInput);
}

TEST(RecombineTest, DisjointGroupsMerge) {
  Schedule a(2), b(2);
  a.Add(1, 0);
  b.Add(2, 0);
  InstanceMapping ma = {{0}, {1, 2}};
  InstanceMapping mb = {{1}, {1, 2}};
  Schedule merged = Recombine({{a, ma}, {b, mb}}, 2);
  EXPECT_TRUE(merged.Contains(1, 0));
  EXPECT_TRUE(merged.Contains(2, 1));
  EXPECT_FALSE(merged.Contains(2, 0));
}

TEST(RecombineTest, ComposedMappings) {
  InstanceMapping outer = {{4, 7}, {3, 5, 9}};
  InstanceMapping inner = {{1, 1, 0}, {2, 0, 3, 1}};
  InstanceMapping composed = ComposeMappings(outer, inner);
  EXPECT_EQ(composed.item_map, (std::vector<ItemId>{7, 7, 4}));
  EXPECT_EQ(composed.day_map, (std::vector<Day>{5, 0, 9, 3}));
}

}  // namespace
}  // namespace covertime

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

#include "covertime/pipeline.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "covertime/bench.h"
#include "covertime/generator.h"
#include "covertime/intervals.h"
#include "test_util.h"

namespace covertime {
namespace {

using testing::CaughtCode;

CoverInstance Generate(InstanceKind kind, int n, Day horizon, uint64_t seed,
                       WindowStyle style = WindowStyle::kLeftAligned, int windows_per_item = 1) {
  GeneratorOptions options;
  options.kind = kind;
  options.n_items = n;
  options.horizon = horizon;
  options.seed = seed;
  options.style = style;
  options.windows_per_item = windows_per_item;
  return GenerateInstance(options);
}

bool HasStep(const SolveReport& report, const std::string& step) {
  return std::find(report.steps.begin(), report.steps.end(), step) != report.steps.end();
}

TEST(SolveCoverTest, SjrpOnNiceInstanceRespectsTheBound) {
  const CoverInstance instance = Generate(InstanceKind::kSjrpCoverage, 6, 16, 3);
  const SolveReport report = SolveCover(instance, {.algorithm = Algorithm::kSjrp});
  EXPECT_EQ(report.algorithm, Algorithm::kSjrp);
  EXPECT_EQ(report.steps, (std::vector<std::string>{"nicify"}));
  ASSERT_EQ(report.leaves.size(), 1u);
  const LeafReport& leaf = report.leaves[0];
  EXPECT_LE(leaf.cost, (32 * LogLogHorizon(16) + 1) * leaf.potential);
  EXPECT_TRUE(CheckFeasible(instance, report.schedule).empty());
  EXPECT_EQ(report.cost, ScheduleCost(instance, report.schedule));
  EXPECT_GE(report.cost, report.lp_value);
}

TEST(SolveCoverTest, IrpIsDeterministicInTheSeed) {
  const CoverInstance instance = Generate(InstanceKind::kIrp, 7, 16, 5, WindowStyle::kArbitrary);
  const SolveOptions options{.algorithm = Algorithm::kIrp, .seed = 11};
  EXPECT_EQ(SolveReportToJson(SolveCover(instance, options)).dump(),
            SolveReportToJson(SolveCover(instance, options)).dump());
}

TEST(SolveCoverTest, AutoFollowsTheOracle) {
  EXPECT_EQ(SolveCover(Generate(InstanceKind::kIrp, 3, 4, 1)).algorithm, Algorithm::kIrp);
  EXPECT_EQ(SolveCover(Generate(InstanceKind::kSjrpLaminar, 3, 4, 1)).algorithm,
            Algorithm::kSjrp);
}

TEST(SolveCoverTest, MismatchedAlgorithmIsUsageError) {
  const CoverInstance metric = Generate(InstanceKind::kIrp, 3, 4, 1);
  EXPECT_EQ(CaughtCode([&] { SolveCover(metric, {.algorithm = Algorithm::kSjrp}); }),
            ErrorCode::kUsage);
  EXPECT_EQ(CaughtCode([&] { SolveCover(metric, {.lp = LpKind::kLovasz}); }), ErrorCode::kUsage);
  const CoverInstance modular = Generate(InstanceKind::kSjrpModular, 3, 4, 1);
  EXPECT_EQ(CaughtCode([&] { SolveCover(modular, {.algorithm = Algorithm::kIrp}); }),
            ErrorCode::kUsage);
}

TEST(SolveCoverTest, ConfigLpCapacity) {
  const CoverInstance instance = Generate(InstanceKind::kIrp, 13, 4, 1);
  EXPECT_EQ(CaughtCode([&] { SolveCover(instance); }), ErrorCode::kCapacity);
  const CoverInstance big = Generate(InstanceKind::kSjrpModular, 13, 4, 1);
  EXPECT_EQ(CaughtCode([&] { SolveCover(big, {.lp = LpKind::kConfig}); }), ErrorCode::kCapacity);
  EXPECT_EQ(SolveCover(big).lp, LpKind::kLovasz);
}

TEST(SolveCoverTest, ArbitraryWindowsAreSplit) {
  const CoverInstance instance =
      Generate(InstanceKind::kSjrpModular, 5, 16, 2, WindowStyle::kArbitrary);
  const SolveReport report = SolveCover(instance);
  EXPECT_TRUE(HasStep(report, "split_left_right"));
  EXPECT_TRUE(CheckFeasible(instance, report.schedule).empty());
}

TEST(SolveCoverTest, LongHorizonIsBounded) {
  const CoverInstance instance =
      Generate(InstanceKind::kSjrpCardinality, 2, 64, 4, WindowStyle::kArbitrary, 3);
  const SolveReport report = SolveCover(instance);
  EXPECT_TRUE(HasStep(report, "bound_time_horizon"));
  for (const LeafReport& leaf : report.leaves) EXPECT_LE(leaf.instance.horizon, 16);
  EXPECT_TRUE(CheckFeasible(instance, report.schedule).empty());
  EXPECT_TRUE(VerifySolution(instance, SolveReportToJson(report)).ok());
}

TEST(SolveCoverTest, AlphaOverride) {
  const CoverInstance instance = Generate(InstanceKind::kSjrpModular, 4, 16, 9);
  const SolveReport report = SolveCover(instance, {.alpha = Rational(1, 4)});
  for (const LeafReport& leaf : report.leaves) EXPECT_EQ(leaf.alpha, Rational(1, 4));
}

TEST(VerifySolutionTest, AcceptsValidPair) {
  const CoverInstance instance = Generate(InstanceKind::kSjrpLaminar, 5, 16, 8);
  const VerifyReport report = VerifySolution(instance, SolveReportToJson(SolveCover(instance)));
  EXPECT_TRUE(report.ok());
}

TEST(VerifySolutionTest, FlagsTamperedSchedule) {
  const CoverInstance instance = Generate(InstanceKind::kSjrpModular, 1, 4, 0);
  Json solution = SolveReportToJson(SolveCover(instance));
  for (Json& day : solution["schedule"]) day = Json::array();
  const VerifyReport report = VerifySolution(instance, solution);
  ASSERT_FALSE(report.ok());
  const DemandWindow& w = instance.windows[0];
  const std::string expected = "window [" + std::to_string(w.start) + "," +
                               std::to_string(w.end) + "] of item 0 is not served";
  EXPECT_EQ(report.violations[0], expected);
}

TEST(VerifySolutionTest, FlagsCostOffByATinyAmount) {
  const CoverInstance instance = Generate(InstanceKind::kIrp, 4, 4, 2);
  Json solution = SolveReportToJson(SolveCover(instance));
  solution["cost"] =
      RationalToJson(RationalFromJson(solution["cost"]) + Rational(1, 1000000000000L));
  EXPECT_FALSE(VerifySolution(instance, solution).ok());
}

TEST(VerifySolutionTest, FlagsBrokenRecombination) {
  const CoverInstance instance = Generate(InstanceKind::kSjrpModular, 3, 4, 2);
  Json solution = SolveReportToJson(SolveCover(instance));
  solution["leaves"] = Json::array();
  EXPECT_FALSE(VerifySolution(instance, solution).ok());
}

TEST(VerifySolutionTest, MismatchedFilesAreUsageErrors) {
  const CoverInstance instance = Generate(InstanceKind::kSjrpModular, 3, 4, 2);
  const Json solution = SolveReportToJson(SolveCover(instance));
  const CoverInstance other = Generate(InstanceKind::kSjrpModular, 3, 8, 2);
  EXPECT_EQ(CaughtCode([&] { VerifySolution(other, solution); }), ErrorCode::kUsage);
  EXPECT_EQ(CaughtCode([&] { VerifySolution(instance, InstanceToJson(instance)); }),
            ErrorCode::kUsage);
}

// gen -> solve -> verify over a matrix of kinds, sizes and window styles.
TEST(PipelinePropertyTest, VerifyAcceptsEverySolvedInstance) {
  const InstanceKind kinds[] = {InstanceKind::kIrp, InstanceKind::kSjrpModular,
                                InstanceKind::kSjrpCardinality, InstanceKind::kSjrpCoverage,
                                InstanceKind::kSjrpLaminar};
  const std::pair<int, Day> sizes[] = {{1, 1}, {2, 16}, {3, 7}, {5, 16}, {8, 4}};
  int runs = 0;
  for (InstanceKind kind : kinds) {
    for (auto [n, horizon] : sizes) {
      for (WindowStyle style : {WindowStyle::kLeftAligned, WindowStyle::kArbitrary}) {
        for (uint64_t seed = 0; seed < 10; ++seed) {
          const CoverInstance instance =
              Generate(kind, n, horizon, seed, style, 1 + static_cast<int>(seed % 2));
          const Json solution = SolveReportToJson(SolveCover(instance, {.seed = seed}));
          const VerifyReport report = VerifySolution(instance, ParseJson(solution.dump()));
          ASSERT_TRUE(report.ok()) << InstanceKindName(kind) << " n=" << n << " T=" << horizon
                                   << " seed=" << seed << ": " << report.violations[0];
          ++runs;
        }
      }
    }
  }
  EXPECT_EQ(runs, 500);
}

TEST(BenchTest, EmptySuiteGivesEmptyTable) {
  EXPECT_TRUE(RunBench({}).empty());
  EXPECT_EQ(BenchRowsToJson({}), Json::array());
}

TEST(BenchTest, SmallSuiteReportsRatios) {
  const BenchSuite suite = BenchSuiteFromJson(ParseJson(R"({"entries": [
      {"kind": "sjrp-modular", "n": 3, "T": 4, "seeds": 5},
      {"kind": "irp", "n": 3, "T": 4, "seeds": 5, "style": "arbitrary"}]})"));
  const std::vector<BenchRow> rows = RunBench(suite);
  ASSERT_EQ(rows.size(), 2u);
  for (const BenchRow& row : rows) {
    EXPECT_EQ(row.runs, 5);
    EXPECT_EQ(row.failures, 0);
    EXPECT_EQ(row.opt_runs, 5);
    EXPECT_GE(*row.max_alg_over_opt, 1.0);
    EXPECT_GE(row.mean_alg_over_lp, 1.0 - 1e-12);
  }
}

TEST(BenchTest, OptimumAbsentBeyondTheCap) {
  BenchSuite suite = BenchSuiteFromJson(
      ParseJson(R"({"brute_force_cap": 0, "entries": [{"n": 4, "T": 8, "seeds": 2}]})"));
  const std::vector<BenchRow> rows = RunBench(suite);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].opt_runs, 0);
  EXPECT_TRUE(BenchRowsToJson(rows)[0]["max_alg_over_opt"].is_null());
  EXPECT_NE(BenchRowsToCsv(rows).find(",2,0,"), std::string::npos);
}

TEST(BenchTest, BadSuiteIsUsageError) {
  EXPECT_EQ(CaughtCode([] { BenchSuiteFromJson(ParseJson(R"({"entries": [{"kind": "x"}]})")); }),
            ErrorCode::kUsage);
}

}  // namespace
}  // namespace covertime

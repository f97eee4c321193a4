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

// End-to-end solving: LP relaxation, reduction to nice instances, rounding
// on each nice piece and recombination, plus an independent verifier for
// the resulting solution files.

#ifndef COVERTIME_PIPELINE_H_
#define COVERTIME_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covertime/instance.h"
#include "covertime/json_io.h"
#include "covertime/reduce.h"

namespace covertime {

enum class Algorithm { kAuto, kSjrp, kIrp };
// kTransported marks a leaf whose LP solution was carried over from the
// instance it was derived from rather than solved afresh.
enum class LpKind { kAuto, kConfig, kLovasz, kTransported };

const char* AlgorithmName(Algorithm algorithm);
Algorithm ParseAlgorithm(std::string_view name);
const char* LpKindName(LpKind lp);
LpKind ParseLpKind(std::string_view name);

struct SolveOptions {
  Algorithm algorithm = Algorithm::kAuto;
  // kAuto takes the configuration LP up to its item limit and the Lovasz
  // program beyond it.
  LpKind lp = LpKind::kAuto;
  uint64_t seed = 0;
  // Iterative rounding sampling constant; defaults to the design rule.
  std::optional<int> k_constant;
  // Supported-set parameter of the Lovasz rounding; defaults to
  // 1 / log log T.
  std::optional<Rational> alpha;
};

// One nice instance produced by the reductions and its rounded schedule.
struct LeafReport {
  CoverInstance instance;
  // Leaf items and days to the input's.
  InstanceMapping mapping;
  LpKind lp = LpKind::kConfig;
  Rational lp_value;
  Schedule schedule;
  Rational cost;
  // Lovasz rounding: the initial potential sum_t f^(x^t) and alpha.
  Rational potential;
  Rational alpha;
  // Iterative rounding: iterations, K, and the fraction of fully redundant
  // path edges over all iterations.
  int iterations = 0;
  int k_constant = 0;
  int edges = 0;
  int redundant_edges = 0;
};

struct SolveReport {
  Algorithm algorithm = Algorithm::kSjrp;
  LpKind lp = LpKind::kConfig;
  // LP value of the input instance; exact for the configuration LP, the
  // exact objective of a near-optimal feasible point for the Lovasz program.
  Rational lp_value;
  Schedule schedule;
  Rational cost;
  // Reductions applied, in order.
  std::vector<std::string> steps;
  std::vector<LeafReport> leaves;
  // Orders placed by the horizon bound, in the input's numbering.
  Schedule resets;
};

// Throws Error(kUsage) when the algorithm does not fit the oracle kind and
// Error(kCapacity) when an LP is too large for the chosen method.
SolveReport SolveCover(const CoverInstance& instance, const SolveOptions& options = {});

Json SolveReportToJson(const SolveReport& report);

struct VerifyReport {
  std::vector<std::string> violations;
  Rational recomputed_cost;
  bool ok() const { return violations.empty(); }
};

// Re-checks a solution document against the instance without trusting any
// of its derived fields: feasibility, the stated cost, and, when leaves are
// listed, that their mapped schedules and the resets unite to the schedule.
// Throws Error(kUsage) if the documents do not belong together.
VerifyReport VerifySolution(const CoverInstance& instance, const Json& solution);

Json VerifyReportToJson(const VerifyReport& report);

}  // namespace covertime

#endif  // COVERTIME_PIPELINE_H_

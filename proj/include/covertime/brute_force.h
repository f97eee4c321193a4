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

#ifndef COVERTIME_BRUTE_FORCE_H_
#define COVERTIME_BRUTE_FORCE_H_

#include <cstdint>

#include "covertime/instance.h"
#include "covertime/rational.h"

namespace covertime {

inline constexpr int kMaxClosureItems = 20;

struct BruteForceOptions {
  // Largest accepted product of window lengths.
  int64_t max_assignments = 10'000'000;
};

struct BruteForceResult {
  Schedule schedule;
  Rational cost;
  // Search nodes visited, for diagnostics.
  int64_t nodes = 0;
};

// Exact optimum. The search serves each window on one of its days, which
// loses nothing for a monotone f. A cost that is not monotone (the metric
// kind) is searched through its closure over supersets instead, and each day
// of the returned schedule holds the minimizing superset, so the schedule's
// cost equals the reported optimum. Depth-first branch and bound:
// windows already served by an earlier choice are skipped, and partial
// costs only grow. Throws Error(kCapacity) when the product of the window
// lengths exceeds the cap, or when a closure is needed over more than
// kMaxClosureItems items.
BruteForceResult BruteForceOptimum(const CoverInstance& instance,
                                   const BruteForceOptions& options = {});

struct RatioReport {
  double alg_over_opt = 0;
  double alg_over_lp = 0;
  // False flags a relaxation larger than the optimum, which is a bug.
  bool lp_at_most_opt = true;
  bool opt_at_most_alg = true;
};

// Throws Error(kMalformedInput) unless opt_cost > 0.
RatioReport MakeRatioReport(const Rational& alg_cost, const Rational& opt_cost,
                            const Rational& lp_value);

}  // namespace covertime

#endif  // COVERTIME_BRUTE_FORCE_H_
